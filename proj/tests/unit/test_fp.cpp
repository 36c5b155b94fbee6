#include <algorithm>

#include "doctest.h"
#include "gen.hpp"
#include "qplab/errors.hpp"
#include "qplab/fp/chains.hpp"
#include "qplab/fp/maximality.hpp"
#include "qplab/fp/presentation.hpp"
#include "qplab/fp/todd_coxeter.hpp"
#include "qplab/groups/constructors.hpp"
#include "qplab/groups/morphisms.hpp"
#include "qplab/groups/subgroups.hpp"

using namespace qplab;
using namespace qplab::fp;
using groups::FiniteGroup;

namespace {

Presentation aut_2a(int m) {
  return Presentation::make({"t", "u"}, {"u^4", "t^" + std::to_string(m), "(u*t)^2", "t^3=(u^2*t)^3",
                                         "([t^-1,u]*u^-1)^2"});
}

Presentation aut_2b(int m) {
  return Presentation::make({"t", "u"}, {"u^4", "t^" + std::to_string(m), "(t*u)^2", "[u^2,t]^2",
                                         "[u^2,t*u*t^-1]", "(t*u^2)^2=(u^2*t)^2"});
}

Presentation triangle(int p, int q) {
  return Presentation::make({"x", "y"}, {"x^" + std::to_string(p), "y^" + std::to_string(q), "(x*y)^2"});
}

FiniteGroup s3_from_cycles() {
  // permutations of {0,1,2}: (1,2,3) and (1,2)
  return FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, {"c", "s"});
}

// The chain that proves non-maximality impossible for m = 2q.
ChainResult klein_chain(int q, const FiniteGroup& S3, const FiniteGroup& Zm, const FiniteGroup& V) {
  const int m = 2 * q;
  Presentation delta = triangle(3, 2 * m);
  std::vector<ChainStep> chain;
  chain.push_back({"theta", {"x", "y"}, {}, &S3, {S3.gen("c"), S3.gen("s")}, {0, S3.gen("s")}});
  chain.push_back({"to Z_m", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &Zm, {1, 0}, {}});
  ChainStep eta{"eta", {}, {}, &V, {}, {}};
  for (int j = 1; j <= m; ++j) {
    eta.names.push_back("x" + std::to_string(j));
    eta.words.push_back("u^" + std::to_string(j - 1) + "*v*u^" + std::to_string(1 - j));
    eta.images.push_back(j % 2 == 1 ? V.gen("b") : V.parse("a*b"));
  }
  eta.names.push_back("x" + std::to_string(m + 1));
  eta.words.push_back("u^" + std::to_string(m));
  eta.images.push_back(V.gen("a"));
  chain.push_back(eta);
  return subgroup_from_homomorphism_chain(delta, chain);
}

}  // namespace

TEST_CASE("word parsing") {
  Presentation p = Presentation::make({"t", "u"}, {});
  CHECK(p.parse_word("[u^2,t]") == Word{2, 2, 1, -2, -2, -1});
  CHECK(p.parse_word("u^2t") == Word{2, 2, 1});
  CHECK(p.parse_word("t^3=(u^2t)^3") == Word{1, 1, -2, -2, -1, -2, -2, -1, -2, -2});
  CHECK(p.parse_word("t*t^-1").empty());
  CHECK(p.to_string(p.parse_word("t^-2*u")) == "t^-2*u");
  CHECK_THROWS_AS(p.parse_word("w"), Error);
  CHECK_THROWS_AS(p.parse_word("(t"), Error);
  auto q = Presentation::parse("x y\nx^3, y^2\n(x*y)^2 # comment\n");
  CHECK(q.ngens() == 2);
  CHECK(q.relators.size() == 3);
}

TEST_CASE("coset enumeration examples") {
  CHECK(todd_coxeter(Presentation::make({"x"}, {"x^5"}), {}, 100).ncosets == 5);
  CHECK(todd_coxeter(aut_2a(6), {}, 10000).ncosets == 48);
  CHECK(todd_coxeter(aut_2b(8), {}, 10000).ncosets == 64);
  CHECK_THROWS_AS(todd_coxeter(Presentation::make({"x", "y"}, {}), {}, 50), Error);
  try {
    todd_coxeter(triangle(3, 7), {}, 500);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CosetLimitExceeded);
  }
}

TEST_CASE("Aut presentations have order 8m") {
  for (int m : {3, 6, 9, 12, 15}) CHECK(todd_coxeter(aut_2a(m), {}, 20000).ncosets == 8 * m);
  for (int m : {4, 8, 12, 16}) CHECK(todd_coxeter(aut_2b(m), {}, 20000).ncosets == 8 * m);
}

TEST_CASE("cayley_from_presentation") {
  auto D7 = cayley_from_presentation(Presentation::make({"r", "s"}, {"r^7", "s^2", "(r*s)^2"}));
  CHECK(D7.order() == 14);
  CHECK(groups::is_isomorphic(D7, groups::dihedral(7)));

  auto A = cayley_from_presentation(aut_2a(6));
  CHECK(A.order() == 48);
  CHECK(groups::is_isomorphic(A, groups::direct_product(groups::cyclic(2), groups::symmetric(4))));

  auto G = cayley_from_presentation(Presentation::make({"a", "t"}, {"a^2", "t^6", "[a,t]^2", "t^3=(a*t)^3"}));
  CHECK(G.order() == 24);
  CHECK(groups::is_isomorphic(G, groups::build_semidirect(6, groups::Action::II)));
  // generators keep their relations
  CHECK(G.pow(G.gen("t"), 3) == G.pow(G.mul(G.gen("a"), G.gen("t")), 3));
}

TEST_CASE("Aut(S) modulo its normal Klein subgroup is dihedral") {
  struct Case {
    int m;
    bool two_a;
  };
  for (auto c : {Case{6, true}, Case{9, true}, Case{12, true}, Case{8, false}, Case{12, false}}) {
    CAPTURE(c.m);
    auto A = cayley_from_presentation(c.two_a ? aut_2a(c.m) : aut_2b(c.m));
    REQUIRE(A.order() == 8 * c.m);
    int found = 0;
    for (const auto& H : groups::all_subgroups(A)) {
      if (H.order() != 4 || groups::is_cyclic(A, H) || !groups::is_normal(A, H)) continue;
      auto Q = groups::quotient_group(A, H);
      if (groups::is_isomorphic(Q.group, groups::dihedral(c.m))) ++found;
    }
    CHECK(found >= 1);
  }
}

TEST_CASE("normality through coset tables") {
  auto D = Presentation::make({"r", "s"}, {"r^7", "s^2", "(r*s)^2"});
  auto t = todd_coxeter(D, {D.parse_word("r")}, 100);
  CHECK(t.ncosets == 2);
  CHECK(is_normal_finite_index(D, t));
  auto t2 = todd_coxeter(D, {D.parse_word("s")}, 100);
  CHECK(t2.ncosets == 7);
  CHECK_FALSE(is_normal_finite_index(D, t2));
}

TEST_CASE("subgroup chains: Delta(3,2m,2), m = 6 and 10") {
  auto S3 = s3_from_cycles();
  auto V = groups::klein_four();
  for (int q : {3, 5}) {
    CAPTURE(q);
    const int m = 2 * q;
    auto Zm = groups::cyclic(m);
    auto res = klein_chain(q, S3, Zm, V);
    CHECK(res.index == 12 * m);
    CHECK(res.steps.size() == 3);
    CHECK(res.steps[0].index_after == 3);
    CHECK(res.steps[1].index_after == 3 * m);
    // independent enumeration with the final generators
    auto delta = triangle(3, 2 * m);
    auto t = todd_coxeter(delta, res.generators, 100000);
    CHECK(t.ncosets == 12 * m);
    // Normal exactly when Delta acts on the cosets through a group of order
    // equal to the index. This happens for q = 3 but not for q = 5.
    auto P = FiniteGroup::from_permutations(t.permutations());
    CHECK(is_normal_finite_index(delta, t) == (P.order() == t.ncosets));
    CHECK(is_normal_finite_index(delta, t) == (q == 3));
    CHECK(P.order() == (q == 3 ? 72 : 600));
    // the named witness x x1 x3 x^-1 leaves K
    Word x1 = delta.parse_word("x^-1*y*x^-1");
    Word x3 = delta.parse_word("y^2*x^-1*y*x^-1*y^-2");
    CHECK(t.act(0, concat(x1, x3)) == 0);
    CHECK(t.act(0, delta.parse_word("x")) != 0);
    // x1 itself is not in K (eta(x1) = b), and the conjugate by x stays in K
    CHECK(t.act(0, x1) != 0);
    Word conj = conjugate(concat(x1, x3), delta.parse_word("x"));
    CHECK(t.act(0, conj) == 0);
  }
}

TEST_CASE("subgroup chains: inconsistent map is rejected") {
  auto S3 = s3_from_cycles();
  auto Zm = groups::cyclic(6);
  Presentation delta = triangle(3, 12);
  std::vector<ChainStep> chain;
  chain.push_back({"theta", {"x", "y"}, {}, &S3, {S3.gen("c"), S3.gen("s")}, {0, S3.gen("s")}});
  // v has order 2 in Gamma, so v -> 1 in Z_6 is not a homomorphism
  chain.push_back({"bad", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &Zm, {1, 1}, {}});
  CHECK_THROWS_AS(subgroup_from_homomorphism_chain(delta, chain), Error);
  try {
    subgroup_from_homomorphism_chain(delta, chain);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChainInconsistent);
  }
}

TEST_CASE("subgroup chains: kernel onto Z8 is not defined on Gamma") {
  auto S3 = s3_from_cycles();
  auto Z8 = groups::cyclic(8);
  std::vector<ChainStep> chain;
  chain.push_back({"theta", {"x", "y"}, {}, &S3, {S3.gen("c"), S3.gen("s")}, {0, S3.gen("s")}});
  chain.push_back({"to Z8", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &Z8, {1, 0}, {}});
  CHECK_THROWS_AS(subgroup_from_homomorphism_chain(triangle(3, 8), chain), Error);
}

TEST_CASE("subgroup chains: trivial chain") {
  auto res = subgroup_from_homomorphism_chain(triangle(3, 8), {});
  CHECK(res.generators.empty());
  CHECK(res.index == 1);
}

TEST_CASE("subgroup chains: Delta(3,8,2) into the order-64 group") {
  auto S3 = s3_from_cycles();
  auto Ghat = cayley_from_presentation(aut_2b(8));
  REQUIRE(Ghat.order() == 64);
  Presentation delta = triangle(3, 8);
  int t = Ghat.gen("t"), u = Ghat.gen("u");
  std::vector<ChainStep> chain;
  chain.push_back({"theta", {"x", "y"}, {}, &S3, {S3.gen("c"), S3.gen("s")}, {0, S3.gen("s")}});
  chain.push_back({"to Ghat", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &Ghat, {t, Ghat.inv(Ghat.mul(u, t))}, {}});
  auto res = subgroup_from_homomorphism_chain(delta, chain);
  CHECK(res.index == 192);
  auto tab = todd_coxeter(delta, res.generators, 100000);
  CHECK(tab.ncosets == 192);
  auto P = FiniteGroup::from_permutations(tab.permutations());
  CHECK(P.order() == 192);
  CHECK(is_normal_finite_index(delta, tab));
}

TEST_CASE("property: relator order does not change the order") {
  testing::Gen gen(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto p = rep % 2 ? aut_2a(9) : aut_2b(8);
    int expect = rep % 2 ? 72 : 64;
    std::shuffle(p.relators.begin(), p.relators.end(), gen.engine());
    REQUIRE(cayley_from_presentation(p).order() == expect);
  }
}

TEST_CASE("property: coset normality agrees with the group engine") {
  auto p = aut_2a(6);
  auto G = cayley_from_presentation(p);
  auto reps = todd_coxeter(p, {}, 1000).transversal();
  for (const auto& H : groups::all_subgroups(G)) {
    std::vector<Word> words;
    for (int h : H.generators) words.push_back(reps[h]);
    auto t = todd_coxeter(p, words, 1000);
    REQUIRE(t.ncosets * H.order() == G.order());
    REQUIRE(is_normal_finite_index(p, t) == groups::is_normal(G, H));
    REQUIRE(verify_coset_table(p, t));
  }
}

TEST_CASE("uniformizing subgroups from the library") {
  auto S3 = s3_from_cycles();
  auto V = groups::klein_four();
  for (int q : {3, 5}) {
    auto r = case1_uniformizing_subgroup(q);
    auto Zm = groups::cyclic(2 * q);
    CHECK(r.index == 24 * q);
    CHECK(r.index == klein_chain(q, S3, Zm, V).index);
    CHECK(r.induced_order == (q == 3 ? 72 : 600));
    CHECK(r.normal == (q == 3));
  }
  auto r8 = case2b_uniformizing_subgroup(aut_2b(8), 8);
  CHECK(r8.index == 192);
  CHECK(r8.induced_order == 192);
  CHECK(r8.normal);
  CHECK_THROWS_AS(case1_uniformizing_subgroup(4), Error);
}
