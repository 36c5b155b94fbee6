#include "qplab/algebra/mobius.hpp"

#include "qplab/errors.hpp"

namespace qplab::algebra {

MobiusTransformation::MobiusTransformation() : a_(1), b_(0), c_(0), d_(1) {}

MobiusTransformation::MobiusTransformation(Cyclo a, Cyclo b, Cyclo c, Cyclo d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    throw Error(ErrorCode::InvalidArgument, "degenerate Mobius transformation (ad - bc = 0)");
}

ProjPoint MobiusTransformation::apply(const ProjPoint& z) const {
  if (z.infinite) {
    if (c_.is_zero()) return ProjPoint::inf();
    return ProjPoint::finite(a_ / c_);
  }
  Cyclo den = c_ * z.value + d_;
  if (den.is_zero()) return ProjPoint::inf();
  return ProjPoint::finite((a_ * z.value + b_) / den);
}

MobiusTransformation MobiusTransformation::compose(const MobiusTransformation& o) const {
  return MobiusTransformation(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                              c_ * o.b_ + d_ * o.d_);
}

MobiusTransformation MobiusTransformation::inverse() const { return MobiusTransformation(d_, -b_, -c_, a_); }

MobiusTransformation MobiusTransformation::canonical() const {
  const Cyclo* lead = !a_.is_zero() ? &a_ : !b_.is_zero() ? &b_ : &c_;
  Cyclo s = lead->inverse();
  MobiusTransformation r;
  r.a_ = a_ * s;
  r.b_ = b_ * s;
  r.c_ = c_ * s;
  r.d_ = d_ * s;
  return r;
}

bool MobiusTransformation::is_identity() const { return *this == MobiusTransformation(); }

bool operator==(const MobiusTransformation& x, const MobiusTransformation& y) {
  // Proportional 2x2 matrices: all 2x2 minors of the stacked 4-vectors vanish.
  const Cyclo* p[4] = {&x.a_, &x.b_, &x.c_, &x.d_};
  const Cyclo* q[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(*p[i] * *q[j] - *p[j] * *q[i]).is_zero()) return false;
  return true;
}

std::string MobiusTransformation::to_string() const {
  return "[" + a_.to_string() + ", " + b_.to_string() + "; " + c_.to_string() + ", " + d_.to_string() + "]";
}

}  // namespace qplab::algebra
