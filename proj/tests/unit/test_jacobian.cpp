#include <memory>
#include <set>

#include "doctest.h"
#include "qplab/covering/generating_vectors.hpp"
#include "qplab/errors.hpp"
#include "qplab/groups/constructors.hpp"
#include "qplab/groups/subgroups.hpp"
#include "qplab/jacobian/group_algebra_decomposition.hpp"
#include "qplab/jacobian/kani_rosen.hpp"

using namespace qplab;
using namespace qplab::jacobian;
using covering::GeneratingVector;
using covering::Signature;
using groups::Action;
using groups::FiniteGroup;
using groups::Subgroup;

namespace {

struct Setup {
  FiniteGroup G;
  std::vector<GeneratingVector> vectors;
};

// heap allocated: the vectors point at G
std::unique_ptr<Setup> make_setup(int m, Action act, const std::string& sig) {
  auto s = std::make_unique<Setup>(Setup{groups::build_semidirect(m, act), {}});
  s->vectors = covering::enumerate_generating_vectors(s->G, Signature::parse(sig)).vectors;
  REQUIRE(!s->vectors.empty());
  return s;
}

Subgroup cyc(const FiniteGroup& G, const std::string& w) { return groups::subgroup_generated(G, {G.parse(w)}); }

// dim V^H straight from the character values
int fixed_dim_direct(const rep::CharacterTable& t, int row, const Subgroup& H) {
  algebra::Cyclo s(0L);
  for (int h : H.elements) s += t.value(row, h);
  s /= algebra::Cyclo(static_cast<long>(H.order()));
  REQUIRE(s.is_rational());
  return static_cast<int>(s.rational_part().get_num().get_si());
}

std::vector<std::tuple<int, Action, std::string>> realizable(int m) {
  std::vector<std::tuple<int, Action, std::string>> out;
  std::string mm = std::to_string(m);
  if (m % 4 == 0) out.emplace_back(m, Action::I, "(0;2," + mm + "," + mm + ")");
  if (m % 4 == 2 && m >= 6) out.emplace_back(m, Action::I, "(0;2," + mm + "," + std::to_string(2 * m) + ")");
  if (m % 3 == 0) out.emplace_back(m, Action::II, "(0;2," + mm + "," + mm + ")");
  return out;
}

}  // namespace

TEST_CASE("Kani-Rosen: Klein involutions") {
  auto sp = make_setup(6, Action::II, "(0;2,6,6)");
  auto& s = *sp;
  auto& v = s.vectors.front();
  auto rep = kani_rosen_check(v, {cyc(s.G, "a"), cyc(s.G, "b"), cyc(s.G, "a*b")}, {"S_a", "S_b", "S_ab"});
  CHECK(rep.total == 3);
  CHECK(rep.genus == 3);
  for (const auto& f : rep.factors) CHECK(f.dimension == 1);
  CHECK(rep.factors[0].label == "S_a");

  auto c1p = make_setup(6, Action::I, "(0;2,6,12)");
  auto& c1 = *c1p;
  auto r1 = kani_rosen_check(c1.vectors.front(), {cyc(c1.G, "a"), cyc(c1.G, "b"), cyc(c1.G, "a*b")});
  CHECK(r1.factors[0].dimension == 2);
  CHECK(r1.factors[1].dimension == 1);
  CHECK(r1.factors[2].dimension == 1);
  CHECK(r1.total == 4);
}

TEST_CASE("Kani-Rosen: genus sums for the families") {
  for (int q : {3, 5, 7}) {
    int m = 2 * q;
    auto sp = make_setup(m, Action::I, "(0;2," + std::to_string(m) + "," + std::to_string(2 * m) + ")");
    auto& s = *sp;
    auto r = kani_rosen_check(s.vectors.front(), {cyc(s.G, "a"), cyc(s.G, "b"), cyc(s.G, "a*b")});
    CHECK(r.factors[0].dimension == (m - 2) / 2);
    CHECK(r.factors[1].dimension == (m - 2) / 4);
    CHECK(r.total == 2 * (q - 1));
  }
  for (int l : {2, 3, 4, 5}) {
    int m = 3 * l;
    auto sp = make_setup(m, Action::II, "(0;2," + std::to_string(m) + "," + std::to_string(m) + ")");
    auto& s = *sp;
    auto r = kani_rosen_check(s.vectors.front(), {cyc(s.G, "a"), cyc(s.G, "b"), cyc(s.G, "a*b")});
    for (const auto& f : r.factors) CHECK(f.dimension == l - 1);
    CHECK(r.total == m - 3);
  }
  for (int l : {2, 3, 4}) {
    int m = 4 * l;
    auto sp = make_setup(m, Action::I, "(0;2," + std::to_string(m) + "," + std::to_string(m) + ")");
    auto& s = *sp;
    auto r = kani_rosen_check(s.vectors.front(), {cyc(s.G, "a"), cyc(s.G, "b"), cyc(s.G, "a*b")});
    CHECK(r.factors[0].dimension == 2 * l - 1);
    CHECK(r.factors[1].dimension == l - 1);
    CHECK(r.total == m - 3);
  }
}

TEST_CASE("Kani-Rosen: violated conditions") {
  auto sp = make_setup(8, Action::I, "(0;2,8,8)");
  auto& s = *sp;
  auto& v = s.vectors.front();
  try {
    kani_rosen_check(v, {groups::whole_group(s.G)});
    FAIL("expected condition (iii)");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionFailed);
    CHECK(std::string(e.what()).find("(iii)") != std::string::npos);
  }
  try {
    kani_rosen_check(v, {cyc(s.G, "b"), cyc(s.G, "t")});
    FAIL("expected condition (i)");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(i)") != std::string::npos);
  }
  try {
    // <a> and <t^4> permute, but S/<a, t^4> has positive genus
    kani_rosen_check(v, {cyc(s.G, "a"), cyc(s.G, "t^4")});
    FAIL("expected condition (ii)");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(ii)") != std::string::npos);
  }
}

TEST_CASE("refinement of the <a> factor") {
  auto c1p = make_setup(6, Action::I, "(0;2,6,12)");
  auto& c1 = *c1p;
  auto& v1 = c1.vectors.front();
  auto r1 = refine_factor(v1, cyc(c1.G, "a"), c1.G.parse("t^3"), c1.G.parse("b"));
  CHECK(r1.genus == 2);
  CHECK(r1.factors[0].dimension == 1);
  CHECK(r1.factors[1].dimension == 1);
  auto r1s = refine_factor(v1, cyc(c1.G, "a"), c1.G.parse("t^3"));
  CHECK(r1s.factors[0].dimension + r1s.factors[1].dimension == 2);

  auto c2p = make_setup(8, Action::I, "(0;2,8,8)");
  auto& c2 = *c2p;
  auto r2 = refine_factor(c2.vectors.front(), cyc(c2.G, "a"), c2.G.parse("t^4"), c2.G.parse("b"));
  CHECK(r2.genus == 3);
  CHECK(r2.factors[0].dimension == 1);
  CHECK(r2.factors[1].dimension == 2);

  CHECK_THROWS_AS(refine_factor(v1, cyc(c1.G, "a"), 0), Error);
  CHECK_THROWS_AS(refine_factor(v1, cyc(c1.G, "a"), c1.G.parse("a")), Error);
  // t is not an involution modulo <a>
  CHECK_THROWS_AS(refine_factor(v1, cyc(c1.G, "a"), c1.G.parse("t")), Error);
}

TEST_CASE("Rojas dimensions at m = 6, action (ii)") {
  auto sp = make_setup(6, Action::II, "(0;2,6,6)");
  auto& s = *sp;
  auto& v = s.vectors.front();
  auto t = rep::character_table(s.G);
  auto dims = rojas_dimensions(v, t);
  REQUIRE(dims.size() == 6);
  // displayed order: W5 is the degree-3 character with value -3 at t^3
  int t3 = s.G.parse("t^3");
  int w5 = -1, w6 = -1;
  for (const auto& d : dims)
    if (d.degree == 3) (t.value(d.orbit.front(), t3) == algebra::Cyclo(-3L) ? w5 : w6) = d.family;
  REQUIRE(w5 >= 0);
  REQUIRE(w6 >= 0);
  for (const auto& d : dims) {
    if (d.family == w5) {
      CHECK(d.dimension == 1);
      CHECK(d.multiplicity == 3);
    } else {
      CHECK(d.dimension == 0);
    }
  }
  auto rep = group_algebra_decomposition(v, t);
  CHECK(rep.total == 3);
  CHECK(rep.method == DecompositionMethod::GroupAlgebra);
  // cross-consistency with Kani-Rosen: three genus-one factors
  auto kr = kani_rosen_check(v, {cyc(s.G, "a"), cyc(s.G, "b"), cyc(s.G, "a*b")});
  CHECK(kr.factors.size() == 3);
  CHECK(kr.total == dims[w5].dimension * dims[w5].multiplicity);
}

TEST_CASE("Rojas dimensions: sum over families equals the genus") {
  for (int m = 3; m <= 12; ++m)
    for (auto [mm, act, sig] : realizable(m)) {
      auto sp = make_setup(mm, act, sig);
      auto& s = *sp;
      auto t = rep::character_table(s.G);
      for (std::size_t i = 0; i < s.vectors.size(); i += 7) {
        auto dims = rojas_dimensions(s.vectors[i], t);
        int total = 0;
        for (const auto& d : dims) {
          CHECK(d.dimension >= 0);
          total += d.dimension * d.multiplicity;
        }
        CHECK(dims.front().dimension == 0);
        INFO(m << " " << sig);
        CHECK(total == s.vectors[i].surface_genus());
      }
    }
}

TEST_CASE("Jimenez subgroup search at m = 6") {
  auto sp = make_setup(6, Action::II, "(0;2,6,6)");
  auto& s = *sp;
  auto& v = s.vectors.front();
  auto t = rep::character_table(s.G);
  auto dims = rojas_dimensions(v, t);
  int target = -1;
  for (const auto& d : dims)
    if (d.dimension > 0) target = d.family;
  REQUIRE(target >= 0);
  auto found = jimenez_subgroup_search(v, t, target);
  std::set<std::vector<int>> got;
  for (const auto& H : found) got.insert(H.elements);
  // every subgroup meeting the lemma's condition, computed from character values
  std::set<std::vector<int>> expect;
  for (const auto& H : groups::all_subgroups(s.G))
    if (fixed_dim_direct(t, dims[target].orbit.front(), H) == 1) expect.insert(H.elements);
  CHECK(got == expect);
  // the class of <a> is among them and each certifies a genus-one quotient
  for (const char* w : {"a", "b", "a*b"}) CHECK(got.count(cyc(s.G, w).elements) == 1);
  for (const auto& H : found) CHECK(covering::quotient_genus(v, H).genus == dims[target].dimension);
  auto classes = groups::subgroup_conjugacy_classes(s.G, found);
  CHECK(classes.size() == 3);
  CHECK(got.count(cyc(s.G, "t^2").elements) == 1);

  int zero = dims[target].family == 0 ? 1 : 0;
  CHECK_THROWS_AS(jimenez_subgroup_search(v, t, zero), Error);
}

TEST_CASE("Carocca-Rodriguez genus equals quotient genus on every subgroup") {
  for (int m : {6, 8, 9, 12})
    for (auto [mm, act, sig] : realizable(m)) {
      auto sp = make_setup(mm, act, sig);
      auto& s = *sp;
      auto t = rep::character_table(s.G);
      auto& v = s.vectors.front();
      for (const auto& H : groups::all_subgroups(s.G)) {
        INFO(m << " " << sig << " " << describe(s.G, H));
        CHECK(carocca_rodriguez_genus(v, t, H) == covering::quotient_genus(v, H).genus);
      }
      CHECK(carocca_rodriguez_genus(v, t, groups::whole_group(s.G)) == 0);
      CHECK(carocca_rodriguez_genus(v, t, groups::trivial_subgroup(s.G)) == v.surface_genus());
    }
}
