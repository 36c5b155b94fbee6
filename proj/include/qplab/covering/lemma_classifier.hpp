#pragma once

#include <vector>

#include "qplab/algebra/gf2.hpp"

namespace qplab::covering {

// F = GF(2)^(m-1) with basis a_1..a_{m-1} and a_m = a_1 + ... + a_{m-1}.
algebra::Bits lemma_basis_vector(int m, int j);  // a_j, 1 <= j <= m (indices taken mod m)
// Images of a_1..a_{m-1} under the shift a_j -> a_{j+1}.
std::vector<algebra::Bits> lemma_shift_map(int m);

enum class LemmaMethod { BruteForce, ProofGuided };

// Codimension-2 subspaces H of F, invariant under the shift, containing no a_j.
// Returned as RREF bases, sorted. Brute force: DimensionTooLarge for m > 13;
// proof-guided: OutOfRange for m > 64.
std::vector<algebra::GF2Matrix> lemma1_classify(int m, LemmaMethod method);

// Span of the vectors a_j + a_{j+s_1} + ... for every j, as an RREF basis.
algebra::GF2Matrix lemma_cyclic_span(int m, const std::vector<int>& offsets);

}  // namespace qplab::covering
