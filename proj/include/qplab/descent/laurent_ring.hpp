#pragma once

#include <string>
#include <vector>

#include "qplab/algebra/multipoly.hpp"
#include "qplab/curves/function_field.hpp"

namespace qplab::descent {

using algebra::Cyclo;
using algebra::MultiPoly;

// sum_k c[k] x^(low + k), trimmed at both ends
struct LaurentPoly {
  int low = 0;
  std::vector<Cyclo> c;

  static LaurentPoly from_poly(const algebra::UniPoly& p, int shift = 0);
  bool is_zero() const { return c.empty(); }
  int high() const { return low + static_cast<int>(c.size()) - 1; }
  void trim();
  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low == b.low && a.c == b.c; }
};

// Elements of Q(zeta)[x, 1/x][y_i] / (y_i^2 - f_i): the part of a curve's
// function field without poles away from x = 0, x = inf. Multiplication is
// plain convolution, so long products stay cheap when one side is short.
class LaurentRing {
 public:
  explicit LaurentRing(const curves::HyperPair& curve);

  using Elem = std::vector<LaurentPoly>;  // indexed by radical bitmask

  Elem zero() const { return Elem(basis_); }
  Elem constant(const Cyclo& c) const;
  // InvalidArgument unless every coefficient has a monomial denominator.
  Elem from_element(const curves::FFE& e) const;
  curves::FFE to_element(const Elem& e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;

  // p(values) by nested Horner over the variables.
  Elem evaluate(const MultiPoly& p, const std::vector<Elem>& values) const;

 private:
  const curves::HyperPair* curve_;
  int basis_;
  std::vector<LaurentPoly> radicands_;
};

}  // namespace qplab::descent
