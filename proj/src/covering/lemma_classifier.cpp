#include "qplab/covering/lemma_classifier.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qplab/errors.hpp"

namespace qplab::covering {

using algebra::Bits;
using algebra::GF2Matrix;

Bits lemma_basis_vector(int m, int j) {
  j = ((j - 1) % m + m) % m + 1;
  if (j == m) return (m - 1 >= 64) ? ~Bits{0} : (Bits{1} << (m - 1)) - 1;
  return Bits{1} << (j - 1);
}

std::vector<Bits> lemma_shift_map(int m) {
  std::vector<Bits> img;
  for (int j = 1; j < m; ++j) img.push_back(lemma_basis_vector(m, j + 1));
  return img;
}

namespace {

Bits apply_map(const std::vector<Bits>& images, Bits v) {
  Bits out = 0;
  while (v) {
    int j = __builtin_ctzll(v);
    out ^= images[j];
    v &= v - 1;
  }
  return out;
}

// rows in RREF with pivot = lowest bit
bool member(const std::vector<Bits>& rows, Bits v) {
  for (Bits r : rows)
    if (v & (r & -r)) v ^= r;
  return v == 0;
}

std::vector<GF2Matrix> brute_force(int m) {
  if (m > 13) throw Error(ErrorCode::DimensionTooLarge, "brute-force classification limited to m <= 13");
  const int n = m - 1;
  const auto shift = lemma_shift_map(m);
  std::vector<Bits> avec;
  for (int j = 1; j <= m; ++j) avec.push_back(lemma_basis_vector(m, j));
  std::vector<GF2Matrix> out;
  algebra::gf2_for_each_subspace_rows(n, 2, [&](const std::vector<Bits>& rows) {
    for (Bits a : avec)
      if (member(rows, a)) return;
    for (Bits r : rows)
      if (!member(rows, apply_map(shift, r))) return;
    out.emplace_back(n, rows);
  });
  for (auto& h : out) h = h.rref();
  std::sort(out.begin(), out.end());
  return out;
}

using V2 = int;  // element of Z2^2 as 2 bits
using Aut2 = std::array<V2, 4>;

std::vector<Aut2> gl2() {
  std::vector<Aut2> out;
  for (V2 e1 = 1; e1 < 4; ++e1)
    for (V2 e2 = 1; e2 < 4; ++e2)
      if (e1 != e2) out.push_back({0, e1, e2, e1 ^ e2});
  return out;
}

std::vector<GF2Matrix> proof_guided(int m) {
  if (m > 64) throw Error(ErrorCode::OutOfRange, "proof-guided classification limited to m <= 64");
  const int n = m - 1;
  std::set<GF2Matrix> found;
  for (const auto& rho : gl2()) {
    for (V2 a = 1; a < 4; ++a) {
      // phi(a_1) = a, phi(a_{j+1}) = rho(phi(a_j))
      std::vector<V2> phi(m + 1);
      phi[1] = a;
      for (int j = 1; j < m; ++j) phi[j + 1] = rho[phi[j]];
      if (rho[phi[m]] != phi[1]) continue;  // m-periodicity
      V2 sum = 0;
      for (int j = 1; j < m; ++j) sum ^= phi[j];
      if (sum != phi[m]) continue;  // a_m = a_1 + ... + a_{m-1}
      V2 span = 0;
      bool two = false;
      for (int j = 1; j <= m; ++j) {
        if (span && phi[j] != span) two = true;
        span = span ? span : phi[j];
      }
      if (!two) continue;  // surjectivity
      // H = ker phi: phi restricted to the basis gives two functionals
      Bits f1 = 0, f2 = 0;
      for (int j = 1; j < m; ++j) {
        if (phi[j] & 1) f1 |= Bits{1} << (j - 1);
        if (phi[j] & 2) f2 |= Bits{1} << (j - 1);
      }
      found.insert(GF2Matrix(n, {f1, f2}).nullspace());
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<GF2Matrix> lemma1_classify(int m, LemmaMethod method) {
  if (m < 3) throw Error(ErrorCode::OutOfRange, "lemma classification needs m >= 3");
  return method == LemmaMethod::BruteForce ? brute_force(m) : proof_guided(m);
}

GF2Matrix lemma_cyclic_span(int m, const std::vector<int>& offsets) {
  std::vector<Bits> rows;
  for (int j = 1; j <= m; ++j) {
    Bits v = lemma_basis_vector(m, j);
    for (int s : offsets) v ^= lemma_basis_vector(m, j + s);
    rows.push_back(v);
  }
  return GF2Matrix(m - 1, rows).rref();
}

}  // namespace qplab::covering
