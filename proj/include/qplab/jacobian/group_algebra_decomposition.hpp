#pragma once

#include <vector>

#include "qplab/covering/generating_vectors.hpp"
#include "qplab/jacobian/kani_rosen.hpp"
#include "qplab/rep/character_table.hpp"

namespace qplab::jacobian {

struct FamilyDimension {
  int family = 0;  // index into rep::rational_irreps
  std::vector<int> orbit;
  int degree = 0;  // dim V_i
  int k = 1;       // schur index times field degree
  int dimension = 0;
  int multiplicity = 0;  // dim V_i / m_i
};

// dim B_i = k_i (dim V_i (gamma - 1) + 1/2 sum_k (dim V_i - dim V_i^<g_k>)) for
// nontrivial families and gamma for the trivial one. NonIntegralDimension when
// the half sum is not an integer.
std::vector<FamilyDimension> rojas_dimensions(const covering::GeneratingVector& v, const rep::CharacterTable& t);

DecompositionReport group_algebra_decomposition(const covering::GeneratingVector& v, const rep::CharacterTable& t);

// Subgroups H with dim V_i^H = m_i and dim V_l^H = 0 for every other family l
// with dim B_l > 0. InvalidArgument when dim B_i = 0.
std::vector<groups::Subgroup> jimenez_subgroup_search(const covering::GeneratingVector& v,
                                                      const rep::CharacterTable& t, int family);

// sum_i dim B_i * dim V_i^H / m_i, the trivial family contributing g(S/G).
// NonIntegralMultiplicity when dim V_i^H is not divisible by m_i.
int carocca_rodriguez_genus(const covering::GeneratingVector& v, const rep::CharacterTable& t,
                            const groups::Subgroup& H);

}  // namespace qplab::jacobian
