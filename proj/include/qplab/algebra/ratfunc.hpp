#pragma once

#include <string>

#include "qplab/algebra/poly.hpp"

namespace qplab::algebra {

// Element of K(x) kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const UniPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Cyclo& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}            // NOLINT
  RationalFunction(const UniPoly& num, const UniPoly& den);

  static RationalFunction x() { return RationalFunction(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // f(x) -> f(q(x))
  RationalFunction compose(const RationalFunction& q) const;
  RationalFunction galois(long k) const;
  RationalFunction derivative() const;
  Cyclo eval(const Cyclo& v) const;  // DivisionByZero at a pole
  std::complex<double> eval(std::complex<double> v) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  UniPoly num_, den_;
  void normalize();
};

}  // namespace qplab::algebra
