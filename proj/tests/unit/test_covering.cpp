#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "qplab/covering/branch_data.hpp"
#include "qplab/covering/generating_vectors.hpp"
#include "qplab/covering/lemma_classifier.hpp"
#include "qplab/covering/signature.hpp"
#include "qplab/errors.hpp"
#include "qplab/groups/constructors.hpp"
#include "qplab/groups/morphisms.hpp"
#include "qplab/groups/subgroups.hpp"

using namespace qplab;
using namespace qplab::covering;
using namespace qplab::groups;
using algebra::Bits;
using algebra::Cyclo;
using algebra::GF2Matrix;
using algebra::ProjPoint;

namespace {

GeneratingVector first_vector(const FiniteGroup& G, const Signature& s) {
  auto c = enumerate_generating_vectors(G, s);
  REQUIRE(!c.vectors.empty());
  return c.vectors.front();
}

// Naive count of triples with product 1, prescribed orders, generating G.
int naive_count(const FiniteGroup& G, const std::vector<int>& p) {
  int n = 0;
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      for (int z = 0; z < G.order(); ++z) {
        if (G.mul(G.mul(x, y), z) != 0) continue;
        if (G.element_order(x) != p[0] || G.element_order(y) != p[1] || G.element_order(z) != p[2]) continue;
        if (subgroup_generated(G, {x, y, z}).order() == G.order()) ++n;
      }
  return n;
}

}  // namespace

TEST_CASE("signature text and Riemann-Hurwitz") {
  auto s = Signature::parse("(0; 2,6,6)");
  CHECK(s == Signature(0, {6, 2, 6}));
  CHECK(s.to_string() == "(0;2,6,6)");
  CHECK(Signature::parse("(2;-)").periods.empty());
  CHECK(Signature::parse("(0;2,3,7)").is_hyperbolic());
  CHECK_FALSE(Signature::parse("(0;2,3,6)").is_hyperbolic());
  CHECK_THROWS_AS(Signature::parse("0;2,3"), Error);
  CHECK(genus_from_rh(24, Signature::parse("(0;2,6,6)")) == 3);
  CHECK(genus_from_rh(24, Signature::parse("(0;2,6,12)")) == 4);
  CHECK(genus_from_rh(1, Signature(5, {})) == 5);
  CHECK(genus_from_rh(168, Signature::parse("(0;2,3,7)")) == 3);
  try {
    genus_from_rh(5, Signature::parse("(0;2,3,7)"));
    FAIL("expected NonIntegralGenus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralGenus);
  }
  for (int q : {3, 5, 7, 9}) CHECK(genus_from_rh(8L * q, Signature(0, {2, 2 * q, 4 * q})) == 2 * (q - 1));
  for (int m : {6, 8, 9, 12, 16, 20, 24}) CHECK(genus_from_rh(4L * m, Signature(0, {2, m, m})) == m - 3);
}

TEST_CASE("quotient genus and fixed points, spec examples") {
  auto G6 = build_semidirect(6, Action::II);
  auto v6 = first_vector(G6, Signature(0, {2, 6, 6}));
  int a = G6.gen("a"), b = G6.gen("b"), ab = G6.mul(a, b);
  CHECK(quotient_genus(v6, subgroup_generated(G6, {a})).genus == 1);
  CHECK(quotient_genus(v6, whole_group(G6)).genus == 0);
  for (int h : {a, b, ab}) CHECK(fixed_point_count(v6, h) == 4);

  auto G8 = build_semidirect(8, Action::I);
  auto v8 = first_vector(G8, Signature(0, {2, 8, 8}));
  int a8 = G8.gen("a"), b8 = G8.gen("b"), ab8 = G8.mul(a8, b8);
  // a is the central involution of action i; it is the free one
  CHECK(quotient_genus(v8, subgroup_generated(G8, {a8})).genus == 3);
  CHECK(fixed_point_count(v8, a8) == 0);
  CHECK(fixed_point_count(v8, b8) == 8);
  CHECK(fixed_point_count(v8, ab8) == 8);
  try {
    fixed_point_count(v8, 0);
    FAIL("expected IdentityElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityElement);
  }
}

TEST_CASE("quotient genus properties over every subgroup") {
  struct C {
    int m;
    Action act;
    Signature sig;
  };
  std::vector<C> cases{{6, Action::I, Signature(0, {2, 6, 12})},
                       {6, Action::II, Signature(0, {2, 6, 6})},
                       {8, Action::I, Signature(0, {2, 8, 8})},
                       {9, Action::II, Signature(0, {2, 9, 9})},
                       {12, Action::II, Signature(0, {2, 12, 12})}};
  for (const auto& c : cases) {
    auto G = build_semidirect(c.m, c.act);
    auto v = first_vector(G, c.sig);
    v.validate();
    const int gS = v.surface_genus();
    CHECK(quotient_genus(v, trivial_subgroup(G)).genus == gS);
    CHECK(quotient_genus(v, whole_group(G)).genus == 0);
    for (const auto& H : all_subgroups(G)) {
      const int index = G.order() / H.order();
      for (const auto& lens : coset_cycle_lengths(v, H)) {
        int s = 0;
        for (int l : lens) s += l;
        CHECK(s == index);
      }
      auto q = quotient_genus(v, H);
      long fix = 0;
      for (int h : H.elements)
        if (h != 0) fix += fixed_point_count(v, h);
      CHECK(2L * gS - 2 == H.order() * (2L * q.genus - 2) + fix);
      // Riemann-Hurwitz for S -> S/H with the reported signature
      CHECK(genus_from_rh(H.order(), q.signature) == gS);
    }
  }
}

TEST_CASE("generating vectors against naive enumeration and Burnside") {
  std::vector<std::pair<FiniteGroup, Signature>> inputs;
  inputs.emplace_back(klein_four(), Signature(0, {2, 2, 2}));
  inputs.emplace_back(build_semidirect(6, Action::II), Signature(0, {2, 6, 6}));
  inputs.emplace_back(build_semidirect(6, Action::I), Signature(0, {2, 6, 12}));
  inputs.emplace_back(build_semidirect(3, Action::II), Signature(0, {2, 3, 3}));
  inputs.emplace_back(symmetric(4), Signature(0, {2, 3, 4}));
  for (const auto& [G, s] : inputs) {
    auto auts = automorphism_group(G);
    auto c = enumerate_generating_vectors(G, s, auts);
    CHECK(static_cast<int>(c.vectors.size()) == naive_count(G, s.periods));
    std::set<std::vector<int>> set;
    for (const auto& v : c.vectors) set.insert(v.entries);
    long fixed = 0;
    for (const auto& phi : auts)
      for (const auto& v : c.vectors) {
        std::vector<int> img;
        for (int x : v.entries) img.push_back(phi.images[x]);
        CHECK(set.count(img) == 1);
        fixed += img == v.entries;
      }
    CHECK(fixed % static_cast<long>(auts.size()) == 0);
    CHECK(c.aut_orbits == fixed / static_cast<long>(auts.size()));
    CHECK(c.braid_orbits <= c.aut_orbits);
  }
  CHECK(enumerate_generating_vectors(klein_four(), Signature(0, {2, 2, 2})).aut_orbits == 1);
  CHECK(enumerate_generating_vectors(build_semidirect(9, Action::II), Signature(0, {2, 9, 9})).aut_orbits == 1);
  CHECK(enumerate_generating_vectors(cyclic(5), Signature(0, {2, 5, 5})).vectors.empty());
  CHECK_THROWS(enumerate_generating_vectors(klein_four(), Signature(1, {2})));
}

TEST_CASE("uniqueness counts") {
  for (int q : {3, 5, 7})
    CHECK(enumerate_generating_vectors(build_semidirect(2 * q, Action::I), Signature(0, {2, 2 * q, 4 * q})).aut_orbits ==
          1);
  for (int m : {6, 9})
    CHECK(enumerate_generating_vectors(build_semidirect(m, Action::II), Signature(0, {2, m, m})).aut_orbits == 1);
  for (int m : {8, 16})
    CHECK(enumerate_generating_vectors(build_semidirect(m, Action::I), Signature(0, {2, m, m})).aut_orbits == 1);
  // For 12 | m the action ii group is A4 x Z_{m/3}; it carries two orbits, only
  // one of which has a genus-zero quotient by the Klein subgroup.
  for (int m : {12, 24}) {
    auto G1 = build_semidirect(m, Action::I);
    auto G2 = build_semidirect(m, Action::II);
    auto c1 = enumerate_generating_vectors(G1, Signature(0, {2, m, m}));
    auto c2 = enumerate_generating_vectors(G2, Signature(0, {2, m, m}));
    CHECK(c1.aut_orbits == 1);
    CHECK(c2.aut_orbits == 2);
    CHECK(c2.braid_orbits == 2);
    auto K = subgroup_generated(G2, {G2.gen("a"), G2.gen("b")});
    std::map<int, int> genus_by_orbit;
    for (std::size_t i = 0; i < c2.vectors.size(); ++i) {
      int g = quotient_genus(c2.vectors[i], K).genus;
      auto [it, ins] = genus_by_orbit.emplace(c2.aut_orbit[i], g);
      CHECK(it->second == g);
    }
    std::multiset<int> gens;
    for (auto [o, g] : genus_by_orbit) gens.insert(g);
    CHECK(gens == std::multiset<int>{0, m / 4});
  }
}

TEST_CASE("signature existence matches the case list") {
  for (int m = 3; m <= 24; ++m)
    for (Action act : {Action::I, Action::II}) {
      if ((act == Action::I && m % 2) || (act == Action::II && m % 3)) continue;
      auto G = build_semidirect(m, act);
      bool mm = has_generating_vector(G, Signature(0, {2, m, m}));
      bool m2m = has_generating_vector(G, Signature(0, {2, m, 2 * m}));
      bool expect_mm = (act == Action::I && m % 4 == 0) || act == Action::II;
      bool expect_m2m = act == Action::I && m % 4 == 2 && m >= 6;
      CHECK_MESSAGE(mm == expect_mm, "m=" << m << " " << to_string(act));
      CHECK_MESSAGE(m2m == expect_m2m, "m=" << m << " " << to_string(act));
    }
}

TEST_CASE("lemma classification") {
  for (int m = 3; m <= 13; ++m) {
    auto bf = lemma1_classify(m, LemmaMethod::BruteForce);
    auto pg = lemma1_classify(m, LemmaMethod::ProofGuided);
    CHECK(bf == pg);
    std::size_t expect = (m % 3 == 0) + (m % 4 == 0);
    CHECK(bf.size() == expect);
    auto shift = lemma_shift_map(m);
    for (const auto& H : bf) {
      CHECK(H.nrows() == m - 3);
      for (int j = 1; j <= m; ++j) CHECK_FALSE(H.contains(lemma_basis_vector(m, j)));
      CHECK(H.apply(shift, m - 1).rref() == H);
    }
    std::set<GF2Matrix> got(bf.begin(), bf.end());
    if (m % 4 == 0) CHECK(got.count(lemma_cyclic_span(m, {2})) == 1);
    if (m % 3 == 0) CHECK(got.count(lemma_cyclic_span(m, {1, 2})) == 1);
  }
  for (int m = 14; m <= 64; ++m) {
    auto pg = lemma1_classify(m, LemmaMethod::ProofGuided);
    CHECK(pg.size() == static_cast<std::size_t>((m % 3 == 0) + (m % 4 == 0)));
  }
  try {
    lemma1_classify(14, LemmaMethod::BruteForce);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionTooLarge);
  }
}

TEST_CASE("lemma basis conventions") {
  for (int m = 3; m <= 12; ++m) {
    Bits s = 0;
    for (int j = 1; j < m; ++j) s ^= lemma_basis_vector(m, j);
    CHECK(s == lemma_basis_vector(m, m));
    CHECK(lemma_basis_vector(m, m + 1) == lemma_basis_vector(m, 1));
    // the shift has order m
    auto sh = lemma_shift_map(m);
    Bits v = lemma_basis_vector(m, 1);
    for (int k = 1; k <= m; ++k) {
      Bits w = 0;
      for (int j = 0; j < m - 1; ++j)
        if (v >> j & 1) w ^= sh[j];
      v = w;
      CHECK((v == lemma_basis_vector(m, 1)) == (k == m));
    }
  }
}

TEST_CASE("branch data") {
  for (int m = 5; m <= 12; ++m) {
    auto d = branch_data(m);
    CHECK(d.lambda.size() == static_cast<std::size_t>(m - 3));
    CHECK(d.T.apply(d.lambda.back()).infinite);
    CHECK(d.U.compose(d.U).is_identity());
    CHECK(d.point(-1) == ProjPoint::finite(Cyclo::zero(m)));
    CHECK(d.point(0) == ProjPoint::finite(Cyclo::one(m)));
    CHECK(d.point(m - 2).infinite);
    for (int j = 1; j <= m - 5; ++j) CHECK(d.U.apply(d.lambda[j - 1]) == ProjPoint::finite(d.lambda[m - 5 - j]));
  }
  auto d8 = branch_data(8);
  // the unique finite fixed point of U among the lambdas is lambda_2 = (1+w)^2/(2w)
  Cyclo w = Cyclo::zeta(8);
  CHECK(d8.lambda[1] == (Cyclo::one(8) + w).pow(2) / (Cyclo(2L) * w));
  CHECK(d8.U.apply(d8.lambda[1]) == ProjPoint::finite(d8.lambda[1]));
  int fixed = 0;
  for (const auto& l : d8.lambda) fixed += d8.U.apply(l) == ProjPoint::finite(l);
  CHECK(fixed == 1);
  CHECK_THROWS(branch_data(4));
}

TEST_CASE("fermat genus") {
  CHECK(fermat_genus(5) == 5);
  CHECK(fermat_genus(6) == 17);
  CHECK(fermat_genus(7) == 49);
  for (int m = 5; m <= 20; ++m) {
    long g = fermat_genus(m);
    CHECK((g - 1) % (1L << (m - 3)) == 0);
    CHECK(1 + (g - 1) / (1L << (m - 3)) == m - 3);
    // Riemann-Hurwitz for the Z2^(m-1) cover of the sphere branched at m points of order 2
    CHECK(genus_from_rh(1L << (m - 1), Signature(0, std::vector<int>(m, 2))) == g);
  }
}
