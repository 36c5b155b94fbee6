#pragma once

#include <string>
#include <vector>

#include "qplab/algebra/rational.hpp"

namespace qplab::covering {

struct Signature {
  int genus = 0;
  std::vector<int> periods;  // sorted, each >= 2

  Signature() = default;
  Signature(int g, std::vector<int> p);

  // "(0;2,6,6)", "(1;-)" or "(1)"
  static Signature parse(const std::string& text);
  std::string to_string() const;

  // 2g - 2 + sum (1 - 1/n_i)
  algebra::Rational orbifold_characteristic() const;
  bool is_hyperbolic() const { return orbifold_characteristic() > 0; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.genus == b.genus && a.periods == b.periods;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

// g with 2g - 2 = order * (2 gamma - 2 + sum (1 - 1/n_i)). NonIntegralGenus otherwise.
int genus_from_rh(long order, const Signature& sig);

}  // namespace qplab::covering
