#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplab/covering/generating_vectors.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::jacobian {

enum class DecompositionMethod { KaniRosen, GroupAlgebra };
std::string to_string(DecompositionMethod m);

struct DecompositionFactor {
  std::string label;
  int dimension = 0;
  int multiplicity = 1;
  std::string provenance;  // subgroup generators or rational family
};

struct DecompositionReport {
  DecompositionMethod method = DecompositionMethod::KaniRosen;
  std::vector<DecompositionFactor> factors;
  int total = 0;  // sum of dimension * multiplicity
  int genus = 0;  // g(S), or g(S/H) for a refinement
};

// Conditions: (i) H_i H_j = H_j H_i, (ii) g(S/H_i H_j) = 0 for i < j,
// (iii) g(S) = sum g(S/H_i). ConditionFailed names the first violation.
DecompositionReport kani_rosen_check(const covering::GeneratingVector& v, const std::vector<groups::Subgroup>& subgroups,
                                     const std::vector<std::string>& labels = {});

// Kani-Rosen on S/H for the pair <d>, <iota d>, where d and iota are elements of
// the ambient group normalizing H and inducing involutions of S/H, and iota
// induces the hyperelliptic involution (g(S/<H, iota>) = 0). Without iota an
// element of that kind commuting with d modulo H is searched for.
DecompositionReport refine_factor(const covering::GeneratingVector& v, const groups::Subgroup& H, int d,
                                  std::optional<int> iota = std::nullopt);

std::string describe(const groups::FiniteGroup& G, const groups::Subgroup& H);

}  // namespace qplab::jacobian
