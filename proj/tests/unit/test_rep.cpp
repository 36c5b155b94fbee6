#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "qplab/errors.hpp"
#include "qplab/fp/presentation.hpp"
#include "qplab/fp/todd_coxeter.hpp"
#include "qplab/groups/constructors.hpp"
#include "qplab/groups/morphisms.hpp"
#include "qplab/groups/subgroups.hpp"
#include "qplab/rep/character_table.hpp"
#include "qplab/rep/group_algebra.hpp"

using namespace qplab;
using namespace qplab::groups;
using namespace qplab::rep;
using algebra::Cyclo;

namespace {

void check_orthogonality(const CharacterTable& t) {
  const int r = t.nchars();
  REQUIRE(r == t.nclasses());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) CHECK(inner_product(t, i, j) == Cyclo(i == j ? 1L : 0L));
  const long n = t.group->order();
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      Cyclo s = Cyclo::zero(t.exponent);
      for (int i = 0; i < r; ++i) s += t.values[i][k] * t.values[i][l].conj();
      Cyclo expect = k == l ? Cyclo(n / static_cast<long>(t.classes[k].size())) : Cyclo(0L);
      CHECK(s == expect);
    }
}

std::vector<FiniteGroup> sample_groups() {
  std::vector<FiniteGroup> v;
  v.push_back(cyclic(1));
  v.push_back(cyclic(7));
  v.push_back(klein_four());
  v.push_back(dihedral(5));
  v.push_back(symmetric(4));
  v.push_back(alternating(4));
  for (int m : {4, 6, 8, 10}) v.push_back(build_semidirect(m, Action::I));
  for (int m : {3, 6, 9, 12}) v.push_back(build_semidirect(m, Action::II));
  return v;
}

}  // namespace

TEST_CASE("displayed character table for m=6, action ii") {
  auto G = fp::cayley_from_presentation(fp::Presentation::make({"a", "t"}, {"a^2", "t^6", "[a,t]^2", "t^3=(a*t)^3"}));
  REQUIRE(G.order() == 24);
  auto t = character_table(G);
  std::vector<int> degs;
  for (int i = 0; i < t.nchars(); ++i) degs.push_back(t.degree(i));
  CHECK(degs == std::vector<int>{1, 1, 1, 1, 1, 1, 3, 3});

  const std::vector<std::string> cols{"1", "a*t^3", "a", "t^3", "t^2", "t^5", "t^4", "t"};
  std::vector<int> reps;
  for (const auto& w : cols) reps.push_back(w == "1" ? 0 : G.parse(w));
  std::set<int> distinct;
  for (int g : reps) distinct.insert(t.class_of[g]);
  CHECK(distinct.size() == 8);

  const Cyclo x = Cyclo::zeta(3), x2 = Cyclo::zeta(3, 2), o(1L), z(0L);
  std::vector<std::vector<Cyclo>> shown{
      {o, o, o, o, o, o, o, o},
      {o, -o, o, -o, o, -o, o, -o},
      {o, -o, o, -o, x2, -x2, x, -x},
      {o, -o, o, -o, x, -x, x2, -x2},
      {o, o, o, o, x2, x2, x, x},
      {o, o, o, o, x, x, x2, x2},
      {Cyclo(3L), o, -o, Cyclo(-3L), z, z, z, z},
      {Cyclo(3L), -o, -o, Cyclo(3L), z, z, z, z},
  };
  std::vector<int> matched(8, -1);
  for (int i = 0; i < 8; ++i) {
    std::vector<Cyclo> row;
    for (int g : reps) row.push_back(t.value(i, g));
    for (int p = 0; p < 8; ++p)
      if (row == shown[p]) matched[i] = p;
    CHECK(matched[i] >= 0);
  }
  std::set<int> uniq(matched.begin(), matched.end());
  CHECK(uniq.size() == 8);

  // V7 (value -3 at t^3)
  int v7 = -1;
  for (int i = 0; i < 8; ++i)
    if (matched[i] == 6) v7 = i;
  REQUIRE(v7 >= 0);
  CHECK(fixed_subspace_dim(t, v7, subgroup_generated(G, {G.parse("a")})) == 1);
  CHECK(fixed_subspace_dim(t, v7, subgroup_generated(G, {G.parse("t")})) == 0);

  // families W1..W6: {V1},{V2},{V3,V4},{V5,V6},{V7},{V8}
  auto fams = rational_irreps(t);
  CHECK(fams.size() == 6);
  std::multiset<std::set<int>> got, want{{0}, {1}, {2, 3}, {4, 5}, {6}, {7}};
  for (const auto& f : fams) {
    std::set<int> s;
    for (int row : f.orbit) s.insert(matched[row]);
    got.insert(s);
    CHECK(f.field_degree == static_cast<int>(f.orbit.size()));
    CHECK(f.schur_index == 1);
  }
  CHECK(got == want);
}

TEST_CASE("semidirect m=6 ii matches the presented group") {
  auto G = build_semidirect(6, Action::II);
  auto t = character_table(G);
  std::vector<int> degs;
  for (int i = 0; i < t.nchars(); ++i) degs.push_back(t.degree(i));
  CHECK(degs == std::vector<int>{1, 1, 1, 1, 1, 1, 3, 3});
  int linear = static_cast<int>(std::count(degs.begin(), degs.end(), 1));
  CHECK(linear == G.order() / derived_subgroup(G).order());
  CHECK(linear == 6);
}

TEST_CASE("small rational families") {
  CHECK(rational_irreps(character_table(cyclic(3))).size() == 2);
  CHECK(rational_irreps(character_table(klein_four())).size() == 4);
  CHECK(rational_irreps(character_table(cyclic(12))).size() == 6);  // divisors of 12
}

TEST_CASE("cyclic groups against explicit characters") {
  for (int n : {1, 2, 5, 8, 12}) {
    auto G = cyclic(n);
    auto t = character_table(G);
    int g = n == 1 ? 0 : G.gen("g");
    std::set<std::vector<Cyclo>> oracle, got;
    for (int j = 0; j < n; ++j) {
      std::vector<Cyclo> row(n);
      for (int k = 0; k < n; ++k) row[G.pow(g, k)] = Cyclo::zeta(std::max(n, 1), static_cast<long>(j) * k);
      oracle.insert(row);
    }
    for (int i = 0; i < t.nchars(); ++i) {
      std::vector<Cyclo> row(n);
      for (int x = 0; x < n; ++x) row[x] = t.value(i, x);
      got.insert(row);
    }
    CHECK(got == oracle);
  }
}

TEST_CASE("direct products tensor the tables") {
  auto A = cyclic(3), B = symmetric(3);
  auto P = direct_product(A, B);
  auto tA = character_table(A), tB = character_table(B), tP = character_table(P);
  REQUIRE(tP.nchars() == tA.nchars() * tB.nchars());
  std::set<std::vector<Cyclo>> oracle, got;
  const int nb = B.order();
  for (int i = 0; i < tA.nchars(); ++i)
    for (int j = 0; j < tB.nchars(); ++j) {
      std::vector<Cyclo> row(P.order());
      for (int x = 0; x < P.order(); ++x) row[x] = tA.value(i, x / nb) * tB.value(j, x % nb);
      oracle.insert(row);
    }
  for (int i = 0; i < tP.nchars(); ++i) {
    std::vector<Cyclo> row(P.order());
    for (int x = 0; x < P.order(); ++x) row[x] = tP.value(i, x);
    got.insert(row);
  }
  CHECK(got == oracle);
}

TEST_CASE("A5 has golden-ratio entries") {
  auto G = alternating(5);
  auto t = character_table(G);
  std::vector<int> degs;
  for (int i = 0; i < t.nchars(); ++i) degs.push_back(t.degree(i));
  CHECK(degs == std::vector<int>{1, 3, 3, 4, 5});
  Cyclo phi = Cyclo(1L) + Cyclo::zeta(5) + Cyclo::zeta(5, 4);  // (1+sqrt5)/2
  bool seen = false;
  for (int i = 0; i < t.nchars(); ++i)
    for (const auto& v : t.values[i]) seen |= v == phi;
  CHECK(seen);
  check_orthogonality(t);
}

TEST_CASE("orthogonality and indicators across groups") {
  for (const auto& G : sample_groups()) {
    auto t = character_table(G);
    check_orthogonality(t);
    long sum = 0;
    for (int i = 0; i < t.nchars(); ++i) {
      sum += static_cast<long>(t.degree(i)) * t.degree(i);
      Cyclo fs = frobenius_schur(t, i);
      CHECK((fs == Cyclo(1L) || fs == Cyclo(0L) || fs == Cyclo(-1L)));
    }
    CHECK(sum == G.order());
    CHECK(t.degree(0) == 1);
    for (const auto& v : t.values[0]) CHECK(v == Cyclo(1L));
  }
}

TEST_CASE("character table does not depend on element labels") {
  testing::Gen gen(77);
  auto G = build_semidirect(12, Action::II);
  auto t = character_table(G);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = G.order();
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin() + 1, p.end(), gen.engine());
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) tab[static_cast<std::size_t>(p[x]) * n + p[y]] = p[G.mul(x, y)];
    FiniteGroup H(n, tab);
    auto u = character_table(H);
    std::multiset<std::vector<Cyclo>> a;
    for (int i = 0; i < t.nchars(); ++i) {
      std::vector<Cyclo> ra(n);
      for (int x = 0; x < n; ++x) ra[x] = t.value(i, x);
      a.insert(ra);
    }
    std::multiset<std::vector<Cyclo>> bb;
    for (int i = 0; i < u.nchars(); ++i) {
      std::vector<Cyclo> rb(n);
      for (int x = 0; x < n; ++x) rb[x] = u.value(i, p[x]);
      bb.insert(rb);
    }
    CHECK(a == bb);
  }
}

TEST_CASE("fixed subspace dimensions") {
  for (const auto& G : sample_groups()) {
    if (G.order() > 48) continue;
    auto t = character_table(G);
    auto subs = all_subgroups(G);
    auto triv = trivial_subgroup(G);
    for (int i = 0; i < t.nchars(); ++i) {
      CHECK(fixed_subspace_dim(t, i, triv) == t.degree(i));
      CHECK(fixed_subspace_dim(t, i, whole_group(G)) == (i == 0 ? 1 : 0));
      for (const auto& H : subs)
        for (const auto& K : subs) {
          if (K.order() % H.order() != 0) continue;
          if (!std::includes(K.elements.begin(), K.elements.end(), H.elements.begin(), H.elements.end())) continue;
          CHECK(fixed_subspace_dim(t, i, K) <= fixed_subspace_dim(t, i, H));
        }
      // Frobenius reciprocity against the permutation character of G/H
      for (const auto& H : subs) {
        auto cosets = left_cosets(G, H);
        Cyclo s = Cyclo::zero(t.exponent);
        for (int g = 0; g < G.order(); ++g) {
          long fixed = 0;
          for (const auto& c : cosets) {
            int x = c[0];
            // g x H == x H  iff  x^-1 g x in H
            int y = G.mul(G.inv(x), G.mul(g, x));
            fixed += std::binary_search(H.elements.begin(), H.elements.end(), y);
          }
          s += Cyclo(fixed) * t.value(i, g).conj();
        }
        s /= Cyclo(static_cast<long>(G.order()));
        CHECK(s == Cyclo(static_cast<long>(fixed_subspace_dim(t, i, H))));
      }
    }
  }
}

TEST_CASE("idempotents") {
  for (int m : {3, 6}) {
    auto G = build_semidirect(m, Action::II);
    auto t = character_table(G);
    auto H = subgroup_generated(G, {G.gen("a")});
    auto id = idempotents(t, H);
    auto one = GroupAlgebraElement::basis(G, 0, t.exponent);
    GroupAlgebraElement sum(G, t.exponent);
    for (std::size_t i = 0; i < id.e.size(); ++i) {
      const auto& e = id.e[i];
      CHECK(e.is_rational());
      CHECK(e.is_central());
      CHECK(e.is_idempotent());
      for (std::size_t j = 0; j < id.e.size(); ++j)
        if (i != j) CHECK((e * id.e[j]).is_zero());
      sum = sum + e;
      CHECK(id.f[i].is_idempotent());
    }
    CHECK(sum == one);
    CHECK(id.p_H.is_idempotent());
    auto pG = subgroup_idempotent(t, whole_group(G));
    auto fams = rational_irreps(t);
    CHECK(fams[0].orbit == std::vector<int>{0});
    CHECK(pG * id.e[0] == pG);
  }
}

TEST_CASE("errors") {
  auto G = build_semidirect(6, Action::II);
  auto t = character_table(G);
  // not a subgroup: the average of a character over {e, a, t} is not integral for V3
  Subgroup bogus{&G, {0, G.gen("a"), G.gen("t")}, {}};
  std::sort(bogus.elements.begin(), bogus.elements.end());
  bool threw = false;
  for (int i = 0; i < t.nchars(); ++i) {
    try {
      fixed_subspace_dim(t, i, bogus);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.code() == ErrorCode::NonIntegral);
    }
  }
  CHECK(threw);
  CHECK_THROWS(character_table(build_semidirect(60, Action::I)));
}
