#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qplab/algebra/ratfunc.hpp"

namespace qplab::curves {

using algebra::Cyclo;
using algebra::RationalFunction;
using algebra::UniPoly;

// Affine curve {y_i^2 = f_i(x)} over Q(zeta_n) with one radicand (hyperelliptic)
// or two (the fiber product y^2 = f, z^2 = g).
class HyperPair {
 public:
  // NotSquarefree unless f, g squarefree of degree >= 1; InvalidArgument if f/g is constant.
  static HyperPair make(UniPoly f, UniPoly g, std::vector<std::string> names = {"y", "z"});
  static HyperPair hyperelliptic(UniPoly f, std::string name = "y");

  int rank() const { return static_cast<int>(radicands_.size()); }
  int basis_size() const { return 1 << rank(); }
  const UniPoly& f() const { return radicands_[0]; }
  const UniPoly& g() const { return radicands_.at(1); }
  const std::vector<UniPoly>& radicands() const { return radicands_; }
  const std::vector<std::string>& names() const { return names_; }
  int base_order() const;  // smallest n with all coefficients in Q(zeta_n)
  // product of radicands over the bits of mask
  const RationalFunction& radicand_product(int mask) const { return products_[mask]; }
  std::string to_string() const;

  friend bool operator==(const HyperPair& a, const HyperPair& b) { return a.radicands_ == b.radicands_; }

 private:
  std::vector<UniPoly> radicands_;
  std::vector<std::string> names_;
  std::vector<RationalFunction> products_;
  void init();
};

// r_0 + r_1 y + r_2 z + r_3 yz, coefficient index = bitmask of radicals.
class FunctionFieldElement {
 public:
  explicit FunctionFieldElement(const HyperPair& c);  // zero
  FunctionFieldElement(const HyperPair& c, const RationalFunction& r);
  FunctionFieldElement(const HyperPair& c, std::vector<RationalFunction> coeffs);

  static FunctionFieldElement x(const HyperPair& c) { return {c, RationalFunction::x()}; }
  static FunctionFieldElement radical(const HyperPair& c, int i);  // y (i = 0) or z (i = 1)

  const HyperPair& curve() const { return *curve_; }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  const RationalFunction& coeff(int mask) const { return c_[mask]; }
  bool is_zero() const;
  bool in_base() const;  // only the constant-basis coefficient is nonzero

  FunctionFieldElement operator-() const;
  FunctionFieldElement& operator+=(const FunctionFieldElement& o);
  FunctionFieldElement& operator-=(const FunctionFieldElement& o);
  FunctionFieldElement& operator*=(const FunctionFieldElement& o);
  FunctionFieldElement& operator/=(const FunctionFieldElement& o);
  friend FunctionFieldElement operator+(FunctionFieldElement a, const FunctionFieldElement& b) { return a += b; }
  friend FunctionFieldElement operator-(FunctionFieldElement a, const FunctionFieldElement& b) { return a -= b; }
  friend FunctionFieldElement operator*(FunctionFieldElement a, const FunctionFieldElement& b) { return a *= b; }
  friend FunctionFieldElement operator/(FunctionFieldElement a, const FunctionFieldElement& b) { return a /= b; }
  friend bool operator==(const FunctionFieldElement& a, const FunctionFieldElement& b);
  friend bool operator!=(const FunctionFieldElement& a, const FunctionFieldElement& b) { return !(a == b); }

  FunctionFieldElement scaled(const RationalFunction& r) const;
  FunctionFieldElement pow(int e) const;
  // sign change on the radicals in flip
  FunctionFieldElement conjugate(int flip) const;
  // product of all conjugates, an element of Q(zeta)(x)
  RationalFunction norm() const;
  FunctionFieldElement inverse() const;  // DivisionByZero on zero

  // Value at a point (x, radical values).
  std::complex<double> eval(std::complex<double> x, const std::vector<std::complex<double>>& radicals) const;

  std::string to_string() const;

 private:
  const HyperPair* curve_;
  std::vector<RationalFunction> c_;
  void check_same(const FunctionFieldElement& o) const;
};

using FFE = FunctionFieldElement;

FFE ff_mul(const FFE& a, const FFE& b);
FFE ff_div(const FFE& a, const FFE& b);
bool ff_equal(const FFE& a, const FFE& b);

// r(e) for a rational function r and an element e.
FFE evaluate_at(const RationalFunction& r, const FFE& e);

// floor((deg h - 1) / 2); NotSquarefree otherwise.
int hyperelliptic_genus(const UniPoly& h);

}  // namespace qplab::curves
