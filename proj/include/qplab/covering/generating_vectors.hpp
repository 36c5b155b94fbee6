#pragma once

#include <vector>

#include "qplab/covering/signature.hpp"
#include "qplab/groups/finite_group.hpp"
#include "qplab/groups/morphisms.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::covering {

struct GeneratingVector {
  const groups::FiniteGroup* group = nullptr;
  std::vector<int> entries;  // g_1, ..., g_r
  Signature signature;       // genus 0

  // Product is 1, orders match the periods, entries generate. VerificationFailed otherwise.
  void validate() const;
  int surface_genus() const { return genus_from_rh(group->order(), signature); }
};

struct QuotientGenus {
  int genus = 0;
  Signature signature;
};

// Genus and signature of S/H via the cycle structure of each g_i on G/H.
QuotientGenus quotient_genus(const GeneratingVector& v, const groups::Subgroup& H);

// Cycle lengths of g_i acting by left multiplication on the left cosets of H.
std::vector<std::vector<int>> coset_cycle_lengths(const GeneratingVector& v, const groups::Subgroup& H);

// sum_i #{x<g_i> : x^-1 h x in <g_i>}. IdentityElement for h = 1.
int fixed_point_count(const GeneratingVector& v, int h);

struct VectorCensus {
  std::vector<GeneratingVector> vectors;  // lexicographic order
  std::vector<int> aut_orbit;             // orbit id per vector
  int aut_orbits = 0;
  int braid_orbits = 0;  // Aut plus swaps of equal-period neighbours
};

// All generating vectors of G with the given genus-0 signature (periods in
// ascending position order). Requires |G| <= 200 and r <= 4.
VectorCensus enumerate_generating_vectors(const groups::FiniteGroup& G, const Signature& sig);
VectorCensus enumerate_generating_vectors(const groups::FiniteGroup& G, const Signature& sig,
                                          const std::vector<groups::GroupHom>& automorphisms);

// Whether at least one generating vector exists (stops at the first).
bool has_generating_vector(const groups::FiniteGroup& G, const Signature& sig);

}  // namespace qplab::covering
