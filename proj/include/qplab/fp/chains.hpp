#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplab/fp/presentation.hpp"
#include "qplab/fp/todd_coxeter.hpp"
#include "qplab/groups/finite_group.hpp"

namespace qplab::fp {

// One step of a chain Gamma_0 = Delta >= Gamma_1 >= ... . The current
// subgroup is generated by named elements, each a word in the previous
// step's names (in Delta's generators for the first step). A homomorphism
// from the current subgroup to a finite target is given on the names; the
// next subgroup is the preimage of target_subgroup (trivial by default).
struct ChainStep {
  std::string label;
  std::vector<std::string> names;
  std::vector<std::string> words;  // parsed against the previous names
  const groups::FiniteGroup* target = nullptr;
  std::vector<int> images;
  std::vector<int> target_subgroup;  // elements; empty means trivial
};

struct ChainStepResult {
  std::string label;
  std::vector<Word> named_in_delta;    // named generators rewritten in Delta
  int index_of_named = 0;              // [Delta : <names>]
  int image_order = 0;                 // |psi(<names>)|
  int relative_index = 0;              // [image : image meet L]
  int index_after = 0;                 // [Delta : preimage]
  bool consistent = false;
};

struct ChainResult {
  std::vector<Word> generators;  // Schreier generators of the final subgroup
  int index = 1;
  std::vector<ChainStepResult> steps;
  CosetTable table;
};

// Reidemeister-Schreier along the chain. ChainInconsistent if a step's
// names do not generate the previous subgroup or the map is not well
// defined (detected by index multiplicativity). The limit applies to each
// coset enumeration.
ChainResult subgroup_from_homomorphism_chain(const Presentation& delta, const std::vector<ChainStep>& chain,
                                             int coset_factor = 200);

}  // namespace qplab::fp
