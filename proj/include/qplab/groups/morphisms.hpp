#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qplab/groups/finite_group.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::groups {

// Homomorphism between two groups that must outlive it.
struct GroupHom {
  const FiniteGroup* domain = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<int> images;

  int operator()(int g) const { return images[g]; }
  bool is_injective() const;
  bool is_surjective() const;
  Subgroup kernel() const;
  Subgroup image() const;
};

// Checks the multiplication law exhaustively; InvalidArgument on failure.
GroupHom make_hom(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<int> images);

// Extends gens[i] -> imgs[i] to a homomorphism defined on <gens> (which must
// be all of dom). Returns nullopt when the assignment is not well defined.
std::optional<GroupHom> extend_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& gens,
                                   const std::vector<int>& imgs);

// Small generating set chosen greedily by descending element order.
std::vector<int> small_generating_set(const FiniteGroup& G);

// Every automorphism, identity first. OrderTooLarge if |G| > 200.
std::vector<GroupHom> automorphism_group(const FiniteGroup& G);
std::optional<GroupHom> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B);
bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

// G/N with the projection; NotNormal when N is not normal. The quotient's
// element i is the i-th left coset (ordered by minimal element).
struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // G index -> quotient index
};
Quotient quotient_group(const FiniteGroup& G, const Subgroup& N);

// Sorted (element order, class size) pairs; equal for isomorphic groups.
std::vector<std::pair<int, int>> class_profile(const FiniteGroup& G);

}  // namespace qplab::groups
