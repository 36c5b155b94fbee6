#pragma once

#include <vector>

#include "qplab/groups/finite_group.hpp"

namespace qplab::groups {

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted
  std::vector<int> generators;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);
};

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);

bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup centralizer(const FiniteGroup& G, int g);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& H);
Subgroup center(const FiniteGroup& G);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, int g);  // g H g^-1
Subgroup derived_subgroup(const FiniteGroup& G);
Subgroup intersection(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
// Normal closure of H in G.
Subgroup normal_closure(const FiniteGroup& G, const Subgroup& H);
// Largest normal subgroup contained in H.
Subgroup core(const FiniteGroup& G, const Subgroup& H);

// Conjugacy classes sorted by (element order, class size, min index).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);
// class_index[g] for the canonical ordering above.
std::vector<int> class_map(const FiniteGroup& G, const std::vector<std::vector<int>>& classes);

// Left cosets gH as sorted index sets, ordered by minimal element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H);
// coset_of[g] = index of the left coset containing g.
std::vector<int> left_coset_map(const FiniteGroup& G, const Subgroup& H);

// Every subgroup once, sorted by (order, elements). OrderTooLarge if |G| > 200.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
// Partition of a subgroup list into conjugacy classes (indices into the list).
std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& G, const std::vector<Subgroup>& subs);

bool is_abelian(const FiniteGroup& G);
bool is_abelian(const FiniteGroup& G, const Subgroup& H);
bool is_cyclic(const FiniteGroup& G, const Subgroup& H);

}  // namespace qplab::groups
