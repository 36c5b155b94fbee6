#pragma once

#include <string>
#include <vector>

#include "qplab/algebra/cyclotomic.hpp"
#include "qplab/groups/finite_group.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::rep {

using algebra::Cyclo;

struct CharacterTable {
  const groups::FiniteGroup* group = nullptr;
  std::vector<std::vector<int>> classes;  // canonical class order
  std::vector<int> class_of;              // element -> class
  std::vector<int> inverse_class;         // class of g^-1
  int exponent = 1;
  std::vector<std::vector<Cyclo>> values;  // rows over Q(zeta_exponent)

  int nclasses() const { return static_cast<int>(classes.size()); }
  int nchars() const { return static_cast<int>(values.size()); }
  int degree(int row) const;
  const Cyclo& value(int row, int g) const { return values[row][class_of[g]]; }
};

// Dixon-Schneider over GF(p), lifted to Q(zeta_e). OrderTooLarge if |G| > 200.
CharacterTable character_table(const groups::FiniteGroup& G);

// (1/|G|) sum chi_i(g) conj(chi_j(g))
Cyclo inner_product(const CharacterTable& t, int i, int j);
// (1/|G|) sum chi(g^2)
Cyclo frobenius_schur(const CharacterTable& t, int row);
// dim V^H = (1/|H|) sum_{h in H} chi(h); NonIntegral if the sum is not an integer.
int fixed_subspace_dim(const CharacterTable& t, int row, const groups::Subgroup& H);

struct RationalIrrepFamily {
  std::vector<int> orbit;  // character rows, sorted
  int field_degree = 1;    // |Gal(K/Q)|, equal to the orbit size
  int schur_index = 1;     // assumed
  int k = 1;               // schur_index * field_degree
  bool schur_assumed = true;
};

// Galois orbits of rows, ordered by their smallest row.
std::vector<RationalIrrepFamily> rational_irreps(const CharacterTable& t);

std::string to_markdown(const CharacterTable& t);

}  // namespace qplab::rep
