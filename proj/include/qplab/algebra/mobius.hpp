#pragma once

#include <string>

#include "qplab/algebra/cyclotomic.hpp"

namespace qplab::algebra {

// Point of the projective line: either a finite value or infinity.
struct ProjPoint {
  Cyclo value;
  bool infinite = false;

  static ProjPoint inf() { return {Cyclo(), true}; }
  static ProjPoint finite(const Cyclo& v) { return {v, false}; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

// z -> (a z + b) / (c z + d) with ad - bc != 0.
class MobiusTransformation {
 public:
  MobiusTransformation();  // identity
  MobiusTransformation(Cyclo a, Cyclo b, Cyclo c, Cyclo d);

  const Cyclo& a() const { return a_; }
  const Cyclo& b() const { return b_; }
  const Cyclo& c() const { return c_; }
  const Cyclo& d() const { return d_; }

  ProjPoint apply(const ProjPoint& z) const;
  ProjPoint apply(const Cyclo& z) const { return apply(ProjPoint::finite(z)); }
  // (this o o)(z) = this(o(z))
  MobiusTransformation compose(const MobiusTransformation& o) const;
  MobiusTransformation inverse() const;
  // Scaled so that the first nonzero entry of (a, b, c, d) is 1.
  MobiusTransformation canonical() const;
  bool is_identity() const;

  // Equality up to a common scalar.
  friend bool operator==(const MobiusTransformation& x, const MobiusTransformation& y);
  friend bool operator!=(const MobiusTransformation& x, const MobiusTransformation& y) { return !(x == y); }

  std::string to_string() const;

 private:
  Cyclo a_, b_, c_, d_;
};

inline ProjPoint mobius_apply(const MobiusTransformation& t, const ProjPoint& z) { return t.apply(z); }

}  // namespace qplab::algebra
