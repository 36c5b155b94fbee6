#include <complex>

#include "doctest.h"
#include "gen.hpp"
#include "qplab/curves/cases.hpp"
#include "qplab/descent/descent.hpp"
#include "qplab/descent/laurent_ring.hpp"
#include "qplab/errors.hpp"

using namespace qplab;
using namespace qplab::descent;
using algebra::RationalFunction;
using algebra::UniPoly;
using cd = std::complex<double>;

namespace {

Cyclo w3() { return Cyclo::zeta(3); }
MultiPoly T(int i) { return MultiPoly::variable(9, i - 1); }
RationalFunction xk(int k) { return k >= 0 ? RationalFunction::x().pow(k) : RationalFunction::x().pow(-k).inverse(); }

cd eval_c(const MultiPoly& p, const std::vector<cd>& v) {
  return p.evaluate<cd>(v, cd(0), cd(1), [](const Cyclo& c) { return c.to_complex(); });
}

// random element of the Laurent part of the function field
FFE random_laurent(const HyperPair& c, testing::Gen& g) {
  std::vector<RationalFunction> cs;
  for (int s = 0; s < c.basis_size(); ++s) {
    RationalFunction r;
    for (int k = -2; k <= 2; ++k)
      if (g.coin()) r += RationalFunction(UniPoly(g.cyclo(3, 4))) * xk(k);
    cs.push_back(r);
  }
  return FFE(c, cs);
}

MultiPoly random_poly(testing::Gen& g, int terms, int maxdeg) {
  MultiPoly p(9);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(9, 0);
    for (int d = static_cast<int>(g.integer(0, maxdeg)); d > 0; --d) ++e[g.integer(0, 8)];
    p += MultiPoly::term(9, g.nonzero_cyclo(3, 5), e);
  }
  return p;
}

}  // namespace

TEST_CASE("sigma and conjugate curves") {
  CHECK(sigma(w3()) == w3() * w3());
  CHECK(sigma(Cyclo(5L)) == Cyclo(5L));
  CHECK(sigma(Cyclo::zeta(6)) == Cyclo::zeta(6).pow(5));
  CHECK_THROWS_AS(sigma(Cyclo::zeta(4)), Error);
  auto model = curves::make_case(curves::Case::TwoA, 2);
  HyperPair cs = conjugate_curve(model->curve);
  UniPoly x2 = UniPoly::monomial(Cyclo(1L), 2);
  CHECK(cs.f() == (x2 - UniPoly(Cyclo(1L))) * (x2 - UniPoly(w3())));
  CHECK(cs.g() == model->curve.g());
  CHECK(conjugate_curve(cs) == model->curve);
}

TEST_CASE("Weil datum") {
  for (int l : {2, 3, 4}) {
    auto model = curves::make_case(curves::Case::TwoA, l);
    auto d = case2a_datum(model->curve, l);
    auto r = verify_weil_datum(d);
    CHECK(r.pullback);
    CHECK(r.cocycle);
  }
  SUBCASE("w3 in place of w3^2 fails") {
    auto model = curves::make_case(curves::Case::TwoA, 2);
    auto r = verify_weil_datum(case2a_datum(model->curve, 2, w3()));
    CHECK_FALSE(r.pass());
  }
  SUBCASE("sixth roots of unity: only +-w3^2 pass") {
    // -w3^2 is the stated datum followed by the involution y -> -y
    auto model = curves::make_case(curves::Case::TwoA, 2);
    int passing = 0;
    for (int k = 0; k < 6; ++k) {
      Cyclo c = Cyclo::zeta(6).pow(k);
      if (verify_weil_datum(case2a_datum(model->curve, 2, c)).pass()) {
        ++passing;
        CHECK((c == w3() * w3() || c == -(w3() * w3())));
      }
    }
    CHECK(passing == 2);
  }
  SUBCASE("identity datum on curves over Q") {
    UniPoly x = UniPoly::monomial(Cyclo(1L), 1);
    auto e = HyperPair::hyperelliptic(x.pow(5) - UniPoly(Cyclo(1L)));
    CHECK(verify_weil_datum(identity_datum(e)).pass());
    auto c = HyperPair::make(x.pow(4) - UniPoly(Cyclo(1L)), x.pow(3) + UniPoly(Cyclo(2L)));
    CHECK(verify_weil_datum(identity_datum(c)).pass());
    auto model = curves::make_case(curves::Case::TwoA, 2);
    CHECK_THROWS_AS(identity_datum(model->curve), Error);
  }
}

TEST_CASE("invariants") {
  auto model = curves::make_case(curves::Case::TwoA, 2);
  const HyperPair& C = model->curve;
  auto d = case2a_datum(C, 2);
  auto inv = build_invariants(d);
  REQUIRE(inv.t.size() == 9);
  FFE x = FFE::x(C), y = FFE::radical(C, 0);
  CHECK(inv.t[3] == FFE(C, RationalFunction(UniPoly(Cyclo(1L)))));
  CHECK(inv.t[0] == FFE(C, RationalFunction::x() + xk(-1)));
  // t5 = y * w3^2 y / x^2 = w3^2 f / x^2
  CHECK(inv.t[4] == FFE(C, RationalFunction(C.f()) * RationalFunction(UniPoly(w3() * w3())) * xk(-2)));
  CHECK(inv.t[1] == y + y.scaled(RationalFunction(UniPoly(w3() * w3())) * xk(-2)));
  for (bool b : inv.twisted_invariant) CHECK(b);
  CHECK(twist(d, x) == FFE(C, xk(-1)));
  CHECK(twist(d, y) != y);
  CHECK(twist(d, x + twist(d, x)) == x + twist(d, x));

  SUBCASE("a failing datum is rejected") {
    auto bad = case2a_datum(C, 2, w3());
    CHECK_THROWS_AS(build_invariants(bad), Error);
  }
}

TEST_CASE("quadric relations") {
  auto model = curves::make_case(curves::Case::TwoA, 2);
  auto d = case2a_datum(model->curve, 2);
  auto inv = build_invariants(d);
  auto rep = verify_quadric_relations(inv);
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.pass());

  SUBCASE("free identities at random rational points") {
    testing::Gen g(11);
    auto gens = invariant_generators();
    auto qs = image_quadrics();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<cd> xs;
      for (int i = 0; i < 6; ++i) xs.push_back(cd(g.rational(7).get_d(), g.rational(7).get_d()));
      std::vector<cd> ts;
      for (const auto& p : gens) ts.push_back(eval_c(MultiPoly(p), xs));
      for (const auto& q : qs) CHECK(std::abs(eval_c(q, ts)) < 1e-8);
    }
  }
  SUBCASE("sign flip on the 4 t_a t_b term") {
    auto qs = image_quadrics();
    std::vector<std::array<int, 2>> pairs{{4, 5}, {4, 6}, {5, 6}};
    for (int i = 0; i < 3; ++i) {
      MultiPoly flipped = qs[i] + Cyclo(8L) * T(pairs[i][0]) * T(pairs[i][1]);
      CHECK_FALSE(vanishes_freely(flipped));
      CHECK_FALSE(vanishes_in_function_field(inv, flipped));
      CHECK_FALSE(vanishes_on_curve(inv, flipped));
      auto r = verify_quadric_relations(inv, {flipped});
      CHECK_FALSE(r.pass());
    }
  }
}

TEST_CASE("Laurent ring agrees with the function field") {
  auto model = curves::make_case(curves::Case::TwoA, 2);
  const HyperPair& C = model->curve;
  LaurentRing ring(C);
  testing::Gen g(5);
  for (int trial = 0; trial < 30; ++trial) {
    FFE a = random_laurent(C, g), b = random_laurent(C, g);
    auto la = ring.from_element(a), lb = ring.from_element(b);
    CHECK(ring.to_element(la) == a);
    CHECK(ring.to_element(ring.mul(la, lb)) == a * b);
    CHECK(ring.to_element(ring.add(la, lb)) == a + b);
  }
  FFE bad(C, RationalFunction::x().inverse() + RationalFunction(UniPoly::monomial(Cyclo(1L), 1) + UniPoly(Cyclo(1L))).inverse());
  CHECK_THROWS_AS(ring.from_element(bad), Error);

  SUBCASE("polynomial evaluation, both routes") {
    auto d = case2a_datum(C, 2);
    auto inv = build_invariants(d);
    auto q = image_quadrics();
    for (int trial = 0; trial < 15; ++trial) {
      MultiPoly p = random_poly(g, 4, 3);
      CHECK(vanishes_on_curve(inv, p) == vanishes_in_function_field(inv, p));
      MultiPoly z = p * q[trial % 3];
      CHECK(vanishes_on_curve(inv, z));
      CHECK(vanishes_in_function_field(inv, z));
      CHECK_FALSE(vanishes_on_curve(inv, z + T(4) - MultiPoly(9, Cyclo(1L)) + MultiPoly(9, Cyclo(algebra::make_rational(1, 2)))));
    }
  }
}

TEST_CASE("P and Q") {
  SUBCASE("l = 1 by one reduction step") {
    auto r = derive_pq(1, PQVariant::Displayed);
    CHECK(r.P == T(1) - MultiPoly(9, Cyclo(1L) + w3()));
    CHECK(r.Q == MultiPoly(9, w3()) - T(4));
  }
  SUBCASE("l = 2 Q at t4 = 1") {
    auto r = derive_pq(2, PQVariant::Displayed);
    std::vector<MultiPoly> subs;
    for (int i = 1; i <= 9; ++i) subs.push_back(i == 4 ? MultiPoly(9, Cyclo(1L)) : T(i));
    CHECK(r.Q.substitute(subs) == MultiPoly(9, Cyclo(2L) + Cyclo(2L) * w3()) - T(1) * T(1));
  }
  SUBCASE("numeric oracle: x a root of x^2 - t1 x + t4") {
    testing::Gen g(3);
    for (int l = 1; l <= 5; ++l)
      for (auto v : {PQVariant::Displayed, PQVariant::CurveC}) {
        auto r = derive_pq(l, v);
        for (int trial = 0; trial < 5; ++trial) {
          cd t1(g.rational(5).get_d(), g.rational(5).get_d()), t4(g.rational(5).get_d(), 0);
          cd x = (t1 + std::sqrt(t1 * t1 - 4.0 * t4)) / 2.0;
          std::vector<cd> ts(9, cd(0));
          ts[0] = t1;
          ts[3] = t4;
          cd rad = cd(1);
          cd w = w3().to_complex();
          cd xl = std::pow(x, l);
          rad = (xl - 1.0) * (xl - (v == PQVariant::Displayed ? w : w * w));
          CHECK(std::abs(eval_c(r.P, ts) * x + eval_c(r.Q, ts) - rad) < 1e-6 * (1 + std::abs(rad)));
        }
      }
  }
  SUBCASE("reduction identity on C") {
    for (int l : {2, 3}) {
      auto model = curves::make_case(curves::Case::TwoA, l);
      auto d = case2a_datum(model->curve, l);
      auto inv = build_invariants(d);
      CHECK(check_pq_reduction(inv, derive_pq(l, PQVariant::CurveC)));
      CHECK(check_pq_reduction(inv, derive_pq(l, PQVariant::Displayed)));
    }
  }
  SUBCASE("comparison with the displayed P, Q") {
    auto disp = compare_with_expected(derive_pq(2, PQVariant::Displayed));
    CHECK(disp.q_matches);
    CHECK_FALSE(disp.p_matches);
    CHECK(derive_pq(2, PQVariant::Displayed).P ==
          T(1) * (T(1) * T(1) - Cyclo(2L) * T(4) + MultiPoly(9, w3() * w3())));
    CHECK(disp.verdict.find("MISMATCH") != std::string::npos);
    auto cc = compare_with_expected(derive_pq(2, PQVariant::CurveC));
    CHECK_FALSE(cc.p_matches);
    CHECK_THROWS_AS(compare_with_expected(derive_pq(3, PQVariant::CurveC)), Error);
  }
  CHECK_THROWS_AS(derive_pq(0, PQVariant::CurveC), Error);
}

TEST_CASE("descent system for l = 2") {
  auto m = derive_descent_system(2);
  CHECK(m.pass());
  REQUIRE(m.traces.size() == 4);
  for (const auto& t : m.traces) CHECK(t.has_rational_coeffs());
  CHECK(m.equations().size() == 7);
  CHECK(m.R_num.size() == 11);
  CHECK(m.R_den.size() == 7);
  CHECK_FALSE(m.r_identity_displayed_B);
  CHECK_FALSE(m.y_display.matches);
  CHECK(m.y_display.matches_with_displayed_B);
  CHECK(m.y_display.negated_with_displayed_B);
  CHECK(m.z_display.matches_with_displayed_B);
  CHECK(m.to_markdown().find("E + E^s") != std::string::npos);

  SUBCASE("numeric oracle at points of C") {
    testing::Gen g(17);
    cd w = w3().to_complex();
    for (int trial = 0; trial < 10; ++trial) {
      cd x(g.rational(4).get_d() + 0.3, g.rational(4).get_d() + 0.1);
      cd x2 = x * x;
      cd y = std::sqrt((x2 - 1.0) * (x2 - w * w)), z = std::sqrt(x2 * x2 + x2 + 1.0);
      std::vector<cd> xs{x, y, z, 1.0 / x, w * w * y / x2, z / x2};
      std::vector<cd> ts;
      for (const auto& p : invariant_generators()) ts.push_back(eval_c(p, xs));
      // scale: each trace is a sum of terms of size up to |t|^34
      double scale = 0;
      for (const auto& [mono, c] : m.traces[0].terms()) {
        cd t = c.to_complex();
        for (int i = 0; i < 9; ++i) t *= std::pow(ts[i], static_cast<int>(mono[i]));
        scale = std::max(scale, std::abs(t));
      }
      for (const auto& e : m.equations()) CHECK(std::abs(eval_c(e, ts)) < 1e-9 * (1 + scale));
      CHECK(std::abs(eval_c(m.R_num, ts) - x * eval_c(m.R_den, ts)) < 1e-8 * (1 + std::abs(eval_c(m.R_den, ts))));
    }
  }
  SUBCASE("mutations of E do not vanish") {
    auto model = curves::make_case(curves::Case::TwoA, 2);
    auto d = case2a_datum(model->curve, 2);
    auto inv = build_invariants(d);
    CHECK(vanishes_on_curve(inv, m.E));
    const auto& [mono, c] = *m.E.terms().begin();
    std::vector<int> e(mono.begin(), mono.begin() + 9);
    CHECK_FALSE(vanishes_on_curve(inv, m.E + MultiPoly::term(9, Cyclo(1L), e)));
    // E^s(t) is the twist of E(t)
    CHECK(vanishes_on_curve(inv, m.E.galois(-1)));
    CHECK_FALSE(vanishes_on_curve(inv, m.E + m.F.galois(-1) * MultiPoly(9, w3()) + MultiPoly(9, Cyclo(1L))));
  }
  CHECK_THROWS_AS(derive_descent_system(3), Error);
}
