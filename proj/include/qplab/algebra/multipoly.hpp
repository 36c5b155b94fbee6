#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qplab/algebra/cyclotomic.hpp"

namespace qplab::algebra {

constexpr int kMaxVars = 16;
using Monomial = std::array<std::uint8_t, kMaxVars>;

// Sparse polynomial in at most 16 variables, exponents below 256.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 1);
  MultiPoly(int nvars, const Cyclo& c);

  static MultiPoly variable(int nvars, int index);
  static MultiPoly constant(int nvars, const Cyclo& c) { return MultiPoly(nvars, c); }
  static MultiPoly term(int nvars, const Cyclo& c, const std::vector<int>& exps);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Cyclo>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // True when every coefficient lies in Q.
  bool has_rational_coeffs() const;
  int total_degree() const;
  int degree_in(int var) const;
  Cyclo coeff(const std::vector<int>& exps) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Cyclo& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Cyclo& s) { return a *= s; }
  friend MultiPoly operator*(const Cyclo& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int e) const;
  MultiPoly galois(long k) const;
  // Replace variable i by subs[i]; all substitutes share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  // Minimize the field of every coefficient.
  MultiPoly minimized() const;

  // Evaluation in any commutative ring T with T(Cyclo) and +,*.
  template <class T, class FromCyclo>
  T evaluate(const std::vector<T>& values, const T& zero, const T& one, FromCyclo from) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  int nvars_;
  std::map<Monomial, Cyclo> terms_;
  void add_term(const Monomial& m, const Cyclo& c);
};

template <class T, class FromCyclo>
T MultiPoly::evaluate(const std::vector<T>& values, const T& zero, const T& one, FromCyclo from) const {
  std::vector<std::vector<T>> powers(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    int d = degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].push_back(one);
    for (int e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * values[v]);
  }
  T acc = zero;
  for (const auto& [mono, c] : terms_) {
    T t = from(c);
    for (int v = 0; v < nvars_; ++v)
      if (mono[v]) t = t * powers[v][mono[v]];
    acc = acc + t;
  }
  return acc;
}

}  // namespace qplab::algebra
