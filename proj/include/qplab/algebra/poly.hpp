#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qplab/algebra/cyclotomic.hpp"

namespace qplab::algebra {

// Dense univariate polynomial with cyclotomic (or rational, order 1)
// coefficients. No trailing zeros; the zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Cyclo> coeffs);
  UniPoly(const Cyclo& constant);  // NOLINT
  UniPoly(long constant);          // NOLINT

  static UniPoly monomial(const Cyclo& c, int degree);
  static UniPoly x() { return monomial(Cyclo(1), 1); }
  // Coefficients listed ascending, rationals only.
  static UniPoly from_ints(std::initializer_list<long> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Cyclo>& coeffs() const { return c_; }
  Cyclo coeff(int i) const;
  Cyclo leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Cyclo& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Cyclo& s) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(int e) const;
  // Quotient and remainder; DivisionByZero for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly galois(long k) const;
  // p(q(x))
  UniPoly compose(const UniPoly& q) const;
  // x -> s*x
  UniPoly scale_var(const Cyclo& s) const;
  Cyclo eval(const Cyclo& v) const;
  std::complex<double> eval(std::complex<double> v) const;

  bool is_squarefree() const;
  // Largest cyclotomic order among the coefficients' fields.
  int field_order() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Cyclo> c_;
  void trim();
};

// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace qplab::algebra
