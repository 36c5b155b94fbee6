#pragma once

#include <string>
#include <vector>

#include "qplab/fp/chains.hpp"

namespace qplab::fp {

// Delta(3, n, 2) = <x, y | x^3, y^n, (x y)^2>
Presentation triangle_presentation(int p, int n);

// A finite-index subgroup K of a triangle group together with the group
// induced by Delta on the cosets of K. K is normal iff that group has
// order [Delta : K].
struct NormalityReport {
  std::string label;
  int index = 0;
  int induced_order = 0;
  bool normal = false;
  std::vector<Word> generators;
  ChainResult chain;
};

// Case 1, m = 2q: K in Delta(3, 2m, 2) through S3, Z_m and the Klein group (index 12m).
NormalityReport case1_uniformizing_subgroup(int q);
// Case 2b: kernel of Delta(3, m, 2) -> Aut, u -> t, v -> (u t)^-1 on the
// subgroup of index 3; aut is the presentation on t, u.
NormalityReport case2b_uniformizing_subgroup(const Presentation& aut, int m);

}  // namespace qplab::fp
