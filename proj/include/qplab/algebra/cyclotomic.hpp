#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qplab/algebra/rational.hpp"

namespace qplab::algebra {

// Power-basis data for Q(zeta_n): the cyclotomic polynomial and the
// reduction of every power zeta^j, 0 <= j < n, onto 1, zeta, ..., zeta^(phi-1).
struct CycloField {
  int order = 1;
  int degree = 1;                            // phi(order)
  std::vector<Integer> phi_poly;             // Phi_n, ascending, monic
  std::vector<std::vector<Integer>> powers;  // powers[j] = zeta^j reduced, size n

  static std::shared_ptr<const CycloField> get(int n);
};

int euler_phi(int n);
int lcm_int(int a, int b);
int gcd_int(int a, int b);

// Exact element of Q(zeta_n) in the power basis modulo Phi_n. The
// representation is canonical for a fixed order, so equality within one
// field is coefficient-wise. Mixed-order arithmetic embeds both operands
// into Q(zeta_lcm) first; the order never shrinks unless minimize() is
// called explicitly.
class Cyclo {
 public:
  Cyclo();  // zero of Q
  Cyclo(const Rational& r);  // NOLINT: implicit rational embedding
  Cyclo(long v);             // NOLINT
  Cyclo(int n, std::vector<Rational> coeffs);

  static Cyclo zero(int n);
  static Cyclo one(int n);
  static Cyclo zeta(int n, long k = 1);  // zeta_n^k
  static Cyclo from_rational(int n, const Rational& r);

  int order() const { return field_->order; }
  int degree() const { return field_->degree; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }

  // Embedding into Q(zeta_N); requires order() | N.
  Cyclo embed(int N) const;
  // Smallest-order field containing this value (explicit, never automatic).
  Cyclo minimize() const;

  // zeta -> zeta^k; requires gcd(k, order) == 1 (NotCoprime otherwise).
  Cyclo galois(long k) const;
  Cyclo conj() const { return galois(-1); }

  Cyclo inverse() const;  // DivisionByZero on zero

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  Cyclo pow(long e) const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  // Total order used for canonical sorting: order, then coefficients.
  friend bool operator<(const Cyclo& a, const Cyclo& b);

  std::complex<double> to_complex() const;
  // Human readable, e.g. "-1 + 2*z6 - 1/2*z6^2"; z<n> is exp(2 pi i / n).
  std::string to_string() const;

 private:
  std::shared_ptr<const CycloField> field_;
  std::vector<Rational> c_;

  void reduce_from(std::vector<Rational>& wide);
  static void align(Cyclo& a, Cyclo& b);
};

// Free-function spellings of the module's operations.
enum class CycloOp { Add, Mul, Div };
Cyclo cyc_arith(const Cyclo& a, const Cyclo& b, CycloOp op);
inline Cyclo galois_apply(const Cyclo& a, long k) { return a.galois(k); }

}  // namespace qplab::algebra
