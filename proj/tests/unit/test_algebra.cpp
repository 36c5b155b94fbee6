#include <cmath>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "qplab/algebra/cyclotomic.hpp"
#include "qplab/algebra/gf2.hpp"
#include "qplab/algebra/mobius.hpp"
#include "qplab/algebra/multipoly.hpp"
#include "qplab/algebra/ratfunc.hpp"
#include "qplab/errors.hpp"

using namespace qplab;
using namespace qplab::algebra;

namespace {

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

// Independent q-binomial via the Pascal recurrence.
std::uint64_t qbinom_oracle(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  return qbinom_oracle(n - 1, k - 1) + (std::uint64_t{1} << k) * qbinom_oracle(n - 1, k);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("cyclotomic examples") {
  Cyclo w = Cyclo::zeta(3);
  CHECK(w + w * w == Cyclo(-1));
  CHECK(cyc_arith(w, w * w, CycloOp::Add) == Cyclo(-1));

  Cyclo z6 = Cyclo::zeta(6);
  Cyclo sq = z6 * z6;
  CHECK(sq == z6 - Cyclo(1));
  CHECK(sq.coeffs().size() == 2);

  Cyclo q = cyc_arith((Cyclo(1) + w) * (Cyclo(1) + w), w, CycloOp::Div);
  CHECK(q == Cyclo::one(3));
  CHECK(close(q.to_complex(), 1.0));
  CHECK_THROWS_AS(cyc_arith(w, Cyclo::zero(3), CycloOp::Div), Error);
}

TEST_CASE("galois action examples") {
  Cyclo w = Cyclo::zeta(3);
  CHECK(galois_apply(w, 2) == w * w);
  Cyclo r = Cyclo::from_rational(12, make_rational(5, 7));
  CHECK(galois_apply(r, 5) == r);
  Cyclo z5 = Cyclo::zeta(5);
  CHECK(galois_apply(z5 + z5.pow(4), 2) == z5.pow(2) + z5.pow(3));
  CHECK_THROWS_AS(galois_apply(Cyclo::zeta(12), 3), Error);
  try {
    galois_apply(Cyclo::zeta(12), 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("mixed orders embed into the lcm field") {
  Cyclo i = Cyclo::zeta(4);
  Cyclo w = Cyclo::zeta(3);
  Cyclo p = i * w;
  CHECK(p.order() == 12);
  CHECK(p == Cyclo::zeta(12, 3 + 4));
  CHECK(close(p.to_complex(), i.to_complex() * w.to_complex()));
  CHECK(Cyclo::zeta(12, 4).minimize() == w);
  CHECK(Cyclo::zeta(12, 4).minimize().order() == 3);
  CHECK((Cyclo::zeta(8) * Cyclo::zeta(8)).minimize().order() == 4);
  CHECK(Cyclo::zeta(6, 3).minimize().order() == 1);
}

TEST_CASE("property: field axioms for random cyclotomic triples") {
  testing::Gen g(20240611);
  for (int n : {3, 4, 6, 12, 20, 24}) {
    for (int rep = 0; rep < 1000; ++rep) {
      Cyclo a = g.cyclo(n), b = g.cyclo(n), c = g.cyclo(n);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == Cyclo::zero(n));
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == Cyclo::one(n));
        REQUIRE(close((b / a).to_complex(), b.to_complex() / a.to_complex()));
      }
      REQUIRE(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    }
  }
}

TEST_CASE("property: galois composition") {
  testing::Gen g(7);
  for (int n : {5, 8, 12, 15, 24}) {
    std::vector<long> units;
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, static_cast<long>(n)) == 1) units.push_back(k);
    for (int rep = 0; rep < 60; ++rep) {
      Cyclo a = g.cyclo(n), b = g.cyclo(n);
      long k = units[g.integer(0, units.size() - 1)];
      long k2 = units[g.integer(0, units.size() - 1)];
      REQUIRE(a.galois(k).galois(k2) == a.galois((k * k2) % n));
      REQUIRE((a * b).galois(k) == a.galois(k) * b.galois(k));
      REQUIRE((a + b).galois(k) == a.galois(k) + b.galois(k));
      REQUIRE(close(a.conj().to_complex(), std::conj(a.to_complex())));
    }
  }
}

TEST_CASE("univariate polynomials") {
  UniPoly x = UniPoly::x();
  UniPoly f = x.pow(3) - UniPoly(1);
  auto [q, r] = f.divmod(x - UniPoly(1));
  CHECK(r.is_zero());
  CHECK(q == x * x + x + UniPoly(1));
  CHECK(gcd(f, x * x - UniPoly(1)) == x - UniPoly(1));
  CHECK(f.is_squarefree());
  CHECK_FALSE((f * (x - UniPoly(1))).is_squarefree());
  Cyclo w = Cyclo::zeta(3);
  CHECK(f.eval(w).is_zero());
  CHECK(UniPoly(std::vector<Cyclo>{Cyclo(0), Cyclo(0)}).is_zero());
  CHECK_THROWS_AS(f.divmod(UniPoly()), Error);

  testing::Gen g(3);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Cyclo> ca, cb;
    for (int i = 0; i < g.integer(1, 5); ++i) ca.push_back(g.cyclo(12, 5));
    for (int i = 0; i < g.integer(1, 4); ++i) cb.push_back(g.cyclo(12, 5));
    UniPoly a(ca), b(cb);
    if (b.is_zero()) continue;
    auto [qq, rr] = a.divmod(b);
    REQUIRE(qq * b + rr == a);
    REQUIRE(rr.degree() < b.degree());
    Cyclo pt = g.cyclo(12, 3);
    REQUIRE(a.compose(b).eval(pt) == a.eval(b.eval(pt)));
  }
}

TEST_CASE("rational functions normalize") {
  UniPoly x = UniPoly::x();
  RationalFunction r(x * x - UniPoly(1), (x - UniPoly(1)) * UniPoly(2));
  CHECK(r.num() == (x + UniPoly(1)) * Cyclo(make_rational(1, 2)));
  CHECK(r.den() == UniPoly(1));
  RationalFunction inv = RationalFunction::x().inverse();
  CHECK(inv * RationalFunction::x() == RationalFunction(1));
  CHECK(inv.compose(inv) == RationalFunction::x());
  RationalFunction s = RationalFunction(x + UniPoly(2)) / RationalFunction(x - UniPoly(3));
  CHECK(s.compose(s).eval(Cyclo(1)) == s.eval(s.eval(Cyclo(1))));
  CHECK_THROWS_AS(s.eval(Cyclo(3)), Error);
}

TEST_CASE("multivariate polynomials") {
  auto t1 = MultiPoly::variable(2, 0), t2 = MultiPoly::variable(2, 1);
  MultiPoly p = (t1 + t2).pow(3);
  CHECK(p.size() == 4);
  CHECK(p.coeff({2, 1}) == Cyclo(3));
  CHECK(p.total_degree() == 3);
  CHECK((p - p).is_zero());
  Cyclo w = Cyclo::zeta(3);
  MultiPoly tr = t1 * w + (t1 * w).galois(2);
  CHECK(tr == -t1);
  CHECK(tr.has_rational_coeffs());
  CHECK_FALSE((t1 * w).has_rational_coeffs());
  MultiPoly sub = p.substitute({t2, t1});
  CHECK(sub == p);
  Cyclo v = p.evaluate<Cyclo>({Cyclo(1), Cyclo(2)}, Cyclo(), Cyclo(1), [](const Cyclo& c) { return c; });
  CHECK(v == Cyclo(27));
}

TEST_CASE("gf2 subspaces") {
  CHECK(gf2_subspaces(2, 2).size() == 1);
  CHECK(gf2_subspaces(3, 2).size() == 7);
  CHECK(gf2_subspaces(4, 2).size() == 35);
  CHECK_THROWS_AS(gf2_subspaces(17, 2), Error);
  for (int n = 0; n <= 10; ++n) {
    for (int c = 0; c <= n; ++c) {
      std::uint64_t cnt = 0;
      bool ranks_ok = true;
      gf2_for_each_subspace_rows(n, c, [&](const std::vector<Bits>& rows) {
        ++cnt;
        if (n <= 6 && GF2Matrix(n, rows).rank() != n - c) ranks_ok = false;
      });
      REQUIRE(ranks_ok);
      REQUIRE(cnt == qbinom_oracle(n, n - c));
      REQUIRE(gaussian_binomial2(n, n - c) == cnt);
    }
  }
  // distinct as point sets for a small case
  std::set<std::vector<Bits>> spans;
  for (const auto& m : gf2_subspaces(5, 2)) {
    std::vector<Bits> pts;
    for (Bits s = 0; s < 8; ++s) {
      Bits v = 0;
      for (int i = 0; i < 3; ++i)
        if (s >> i & 1) v ^= m.rows()[i];
      pts.push_back(v);
    }
    std::sort(pts.begin(), pts.end());
    spans.insert(pts);
  }
  CHECK(spans.size() == 155);
}

TEST_CASE("gf2 nullspace") {
  GF2Matrix m(4, {0b0011, 0b0110});
  GF2Matrix k = m.nullspace();
  CHECK(k.nrows() == 2);
  for (auto v : k.rows())
    for (auto r : m.rows()) CHECK(parity(v & r) == 0);
  CHECK(m.contains(0b0101));
  CHECK_FALSE(m.contains(0b1000));
}

TEST_CASE("mobius transformations") {
  const int m = 8;
  Cyclo w = Cyclo::zeta(m);
  Cyclo s = (Cyclo(1) + w) * (Cyclo(1) + w);
  MobiusTransformation T(Cyclo(0), s, -w, s);
  CHECK(T.apply(ProjPoint::inf()) == ProjPoint::finite(Cyclo(0)));
  CHECK(T.apply(Cyclo(0)) == ProjPoint::finite(Cyclo(1)));
  MobiusTransformation U(Cyclo(-1), s / w, Cyclo(0), Cyclo(1));
  // The fixed point is M(-1) = (1+w)^2/(2w), not -1 itself.
  Cyclo mid = s / (w * Cyclo(2));
  CHECK(U.apply(mid) == ProjPoint::finite(mid));
  CHECK(U.apply(Cyclo(-1)) != ProjPoint::finite(Cyclo(-1)));
  CHECK(MobiusTransformation().apply(w) == ProjPoint::finite(w));
  CHECK(T.compose(T.inverse()).canonical().is_identity());
  CHECK_THROWS_AS(MobiusTransformation(Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1)), Error);

  testing::Gen g(11);
  for (int rep = 0; rep < 50; ++rep) {
    auto rnd = [&] {
      for (;;) {
        try {
          return MobiusTransformation(g.cyclo(12, 4), g.cyclo(12, 4), g.cyclo(12, 4), g.cyclo(12, 4));
        } catch (const Error&) {
        }
      }
    };
    auto A = rnd(), B = rnd(), C = rnd();
    REQUIRE(A.compose(B).compose(C) == A.compose(B.compose(C)));
    REQUIRE(A.compose(A.inverse()).is_identity());
    Cyclo z = g.cyclo(12, 4);
    ProjPoint lhs = A.compose(B).apply(z);
    ProjPoint rhs = A.apply(B.apply(z));
    REQUIRE(lhs == rhs);
  }
}
