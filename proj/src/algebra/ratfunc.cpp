#include "qplab/algebra/ratfunc.hpp"

#include "qplab/errors.hpp"

namespace qplab::algebra {

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Cyclo lead = den_.leading();
  if (!lead.is_one()) {
    Cyclo inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RationalFunction RationalFunction::compose(const RationalFunction& q) const {
  // Horner on numerator and denominator separately, then divide.
  auto horner = [&q](const UniPoly& p) {
    if (q.is_polynomial()) return RationalFunction(p.compose(q.num()));
    // Homogenize: p(N/D) = sum c_i N^i D^(d-i) / D^d
    const int d = p.degree();
    UniPoly acc;
    UniPoly npow(1);
    std::vector<UniPoly> dpows(d + 1, UniPoly(1));
    for (int i = 1; i <= d; ++i) dpows[i] = dpows[i - 1] * q.den();
    for (int i = 0; i <= d; ++i) {
      if (!p.coeff(i).is_zero()) acc += npow * dpows[d - i] * p.coeff(i);
      npow *= q.num();
    }
    return RationalFunction(acc, d > 0 ? dpows[d] : UniPoly(1));
  };
  if (is_zero()) return {};
  return horner(num_) / horner(den_);
}

RationalFunction RationalFunction::galois(long k) const { return RationalFunction(num_.galois(k), den_.galois(k)); }

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Cyclo RationalFunction::eval(const Cyclo& v) const {
  Cyclo d = den_.eval(v);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
  return num_.eval(v) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> v) const { return num_.eval(v) / den_.eval(v); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) {
    if (den_.leading().is_one()) return num_.to_string(var);
  }
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace qplab::algebra
