#pragma once

#include <cstdint>
#include <vector>

#include "qplab/fp/presentation.hpp"
#include "qplab/groups/finite_group.hpp"

namespace qplab::fp {

constexpr int kHardCosetCap = 1000000;

// Complete coset table: right action of generators on cosets, coset 0 is
// the subgroup itself, numbered by first appearance in a BFS.
struct CosetTable {
  int ncosets = 0;
  int ngens = 0;
  std::vector<std::vector<int>> action;      // action[g][c] = c . g
  std::vector<std::vector<int>> inv_action;  // inv_action[g][c] = c . g^-1
  std::vector<Word> subgroup_words;

  int act(int coset, int letter) const {
    return letter > 0 ? action[letter - 1][coset] : inv_action[-letter - 1][coset];
  }
  int act(int coset, const Word& w) const;
  // Representative words from the BFS spanning tree (coset i = H . rep[i]).
  std::vector<Word> transversal() const;
  // Generator permutations of the coset set.
  std::vector<groups::Perm> permutations() const { return action; }
};

struct EnumerationStats {
  std::int64_t defined = 0;
  std::int64_t max_live = 0;
  int lookaheads = 0;
};

// HLT enumeration with lookahead. max_cosets bounds the number of live
// cosets; CosetLimitExceeded when it cannot complete within that bound.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words, int max_cosets,
                        EnumerationStats* stats = nullptr);

// Relators act trivially on every coset and subgroup words fix coset 0.
bool verify_coset_table(const Presentation& p, const CosetTable& t);

// Group on the cosets of the trivial subgroup (regular action); element i
// corresponds to coset i, generators are distinguished by their names.
groups::FiniteGroup cayley_from_presentation(const Presentation& p, int max_cosets = 200000);

// True iff the subgroup acts trivially on all its cosets (equivalently, is
// normal).
bool is_normal_finite_index(const Presentation& p, const CosetTable& t);

}  // namespace qplab::fp
