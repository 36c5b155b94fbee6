#include "qplab/descent/descent.hpp"

#include <sstream>

#include "qplab/descent/laurent_ring.hpp"
#include "qplab/errors.hpp"

namespace qplab::descent {

using algebra::RationalFunction;
using algebra::UniPoly;

namespace {

constexpr int kT = 9;  // t1..t9
constexpr int kS = 11; // t1..t9, P, Q

MultiPoly var(int n, int i) { return MultiPoly::variable(n, i - 1); }
MultiPoly cst(int n, const Cyclo& c) { return MultiPoly(n, c); }
Cyclo w3() { return Cyclo::zeta(3); }

bool in_q_omega(int order) { return order == 1 || order == 2 || order == 3 || order == 6; }

RationalFunction rf_sigma(const RationalFunction& r) { return r.galois(-1); }

FFE from_cyclo(const HyperPair& c, const Cyclo& v) { return FFE(c, RationalFunction(UniPoly(v))); }

FFE eval_ffe(const MultiPoly& p, const std::vector<FFE>& values, const HyperPair& c) {
  return p.evaluate<FFE>(values, FFE(c), from_cyclo(c, Cyclo(1L)), [&](const Cyclo& v) { return from_cyclo(c, v); });
}

std::string first_irrational(const MultiPoly& p, const std::vector<std::string>& names) {
  for (const auto& [mono, c] : p.terms()) {
    if (c.is_rational()) continue;
    std::vector<int> e(mono.begin(), mono.begin() + p.nvars());
    return MultiPoly::term(p.nvars(), c, e).to_string(names);
  }
  return "";
}

// sum_i c_i N^i D^(deg - i)
MultiPoly homogenize(const UniPoly& f, const MultiPoly& N, const MultiPoly& D) {
  const int d = f.degree();
  std::vector<MultiPoly> np{cst(N.nvars(), Cyclo(1L))}, dp{cst(N.nvars(), Cyclo(1L))};
  for (int i = 1; i <= d; ++i) {
    np.push_back(np.back() * N);
    dp.push_back(dp.back() * D);
  }
  MultiPoly r(N.nvars());
  for (int i = 0; i <= d; ++i)
    if (!f.coeff(i).is_zero()) r += f.coeff(i) * (np[i] * dp[d - i]);
  return r;
}

UniPoly pq_radicand(int l, PQVariant v) {
  UniPoly xl = UniPoly::monomial(Cyclo(1L), l);
  Cyclo c = v == PQVariant::Displayed ? w3() : w3() * w3();
  return (xl - UniPoly(Cyclo(1L))) * (xl - UniPoly(c));
}

// Expressions of the elimination in 11 variables; P and Q stay symbolic.
struct Symbolic {
  MultiPoly Nr, Dr, Ny, Dy, Nz, Dz;
};

Symbolic symbolic(bool displayed_B) {
  const int n = kS;
  auto t = [&](int i) { return var(n, i); };
  MultiPoly P = var(n, 10), Q = var(n, 11);
  MultiPoly D4 = t(1) * t(1) - Cyclo(4L) * t(4);
  MultiPoly A = (t(7) - t(1) * t(2)).pow(2) - t(2) * t(2) * t(4);
  MultiPoly B = displayed_B ? t(2) * (Cyclo(2L) * t(7) - t(1)) : t(2) * (Cyclo(2L) * t(7) - t(1) * t(2));
  Symbolic s;
  s.Nr = A - D4 * Q;
  s.Dr = D4 * P - B;
  // y = (t7 - t1 t2 + t2 x) / (2x - t1), z likewise with t3, t8
  s.Ny = (t(7) - t(1) * t(2)) * s.Dr + t(2) * s.Nr;
  s.Dy = Cyclo(2L) * s.Nr - t(1) * s.Dr;
  s.Nz = (t(8) - t(1) * t(3)) * s.Dr + t(3) * s.Nr;
  s.Dz = s.Dy;
  return s;
}

// The displayed closed forms for y and z over the common denominator.
struct Display {
  MultiPoly y_num, z_num, den;
};

Display displayed_fractions() {
  const int n = kS;
  auto t = [&](int i) { return var(n, i); };
  auto c = [&](long v) { return Cyclo(v); };
  MultiPoly P = var(n, 10), Q = var(n, 11);
  MultiPoly t1 = t(1), t2 = t(2), t3 = t(3), t4 = t(4), t7 = t(7), t8 = t(8);
  Display d;
  d.y_num = P * (t1.pow(3) * t2 - t1 * t1 * t7 - c(4) * t1 * t2 * t4 + c(4) * t4 * t7) +
            Q * (t1 * t1 * t2 - c(4) * t2 * t4) - t1 * t1 * t2.pow(3) + t1 * t1 * t2 * t2 - t1 * t2 * t7 +
            t2.pow(3) * t4 + t2 * t7 * t7;
  d.z_num = P * (t1.pow(3) * t3 - t1 * t1 * t8 - c(4) * t1 * t3 * t4 + c(4) * t4 * t8) +
            Q * (t1 * t1 * t3 - c(4) * t3 * t4) - t1 * t1 * t2 * t2 * t3 + t1 * t1 * t2 * t3 - t1 * t2 * t8 +
            t2 * t2 * t3 * t4 + c(2) * t2 * t7 * t8 - t3 * t7 * t7;
  d.den = P * (t1.pow(3) - c(4) * t1 * t4) + c(2) * Q * (t1 * t1 - c(4) * t4) - c(2) * t1 * t1 * t2 * t2 +
          t1 * t1 * t2 + c(2) * t1 * t2 * t7 + c(2) * t2 * t2 * t4 - c(2) * t7 * t7;
  return d;
}

DisplayComparison compare_display(const MultiPoly& num, const MultiPoly& den, bool z) {
  DisplayComparison r;
  Symbolic ours = symbolic(false), typo = symbolic(true);
  const MultiPoly& n0 = z ? ours.Nz : ours.Ny;
  const MultiPoly& d0 = z ? ours.Dz : ours.Dy;
  const MultiPoly& n1 = z ? typo.Nz : typo.Ny;
  const MultiPoly& d1 = z ? typo.Dz : typo.Dy;
  r.matches = num * d0 == n0 * den;
  r.matches_with_displayed_B = num * d1 == n1 * den;
  r.negated_with_displayed_B = num == -n1 && den == -d1;
  return r;
}

// 11 variables -> 9, substituting P and Q
MultiPoly specialize(const MultiPoly& p, const MultiPoly& P, const MultiPoly& Q) {
  std::vector<MultiPoly> subs;
  for (int i = 1; i <= kT; ++i) subs.push_back(var(kT, i));
  subs.push_back(P);
  subs.push_back(Q);
  return p.substitute(subs);
}

}  // namespace

std::vector<std::string> invariant_names() {
  std::vector<std::string> n;
  for (int i = 1; i <= kT; ++i) n.push_back("t" + std::to_string(i));
  return n;
}

Cyclo sigma(const Cyclo& c) {
  Cyclo m = c.minimize();
  if (!in_q_omega(m.order()))
    throw Error(ErrorCode::InvalidArgument, "coefficient outside Q(w3): " + c.to_string());
  return m.galois(-1);
}

HyperPair conjugate_curve(const HyperPair& c) {
  if (!in_q_omega(c.base_order()))
    throw Error(ErrorCode::InvalidArgument, "curve not defined over Q(w3): " + c.to_string());
  if (c.rank() == 1) return HyperPair::hyperelliptic(c.f().galois(-1), c.names()[0]);
  return HyperPair::make(c.f().galois(-1), c.g().galois(-1), c.names());
}

FFE conjugate_element(const FFE& e, const HyperPair& target) {
  std::vector<RationalFunction> cs;
  for (const auto& r : e.coeffs()) cs.push_back(rf_sigma(r));
  return FFE(target, cs);
}

RationalMap conjugate_map(const RationalMap& f, const HyperPair& source_sigma, const HyperPair& target_sigma) {
  std::vector<FFE> coords;
  for (const auto& c : f.coords()) coords.push_back(conjugate_element(c, source_sigma));
  return RationalMap(source_sigma, target_sigma, conjugate_element(f.X(), source_sigma), coords);
}

GaloisDatum case2a_datum(const HyperPair& curve, int l, const Cyclo& y_coefficient) {
  if (curve.rank() != 2) throw Error(ErrorCode::InvalidArgument, "case 2a datum needs y and z");
  if (l < 1) throw Error(ErrorCode::OutOfRange, "l must be positive");
  auto conj = std::make_shared<const HyperPair>(conjugate_curve(curve));
  RationalFunction xl = RationalFunction::x().pow(l);
  FFE X(curve, RationalFunction::x().inverse());
  FFE y = FFE::radical(curve, 0).scaled(RationalFunction(UniPoly(y_coefficient)) / xl);
  FFE z = FFE::radical(curve, 1).scaled(xl.inverse());
  RationalMap f(curve, *conj, X, {y, z});
  return GaloisDatum{&curve, conj, 2, std::move(f)};
}

GaloisDatum case2a_datum(const HyperPair& curve, int l) { return case2a_datum(curve, l, w3() * w3()); }

GaloisDatum identity_datum(const HyperPair& curve) {
  if (curve.base_order() > 2) throw Error(ErrorCode::InvalidArgument, "identity datum needs a curve over Q");
  auto conj = std::make_shared<const HyperPair>(conjugate_curve(curve));
  std::vector<FFE> coords;
  for (int i = 0; i < curve.rank(); ++i) coords.push_back(FFE::radical(curve, i));
  RationalMap f(curve, *conj, FFE::x(curve), coords);
  return GaloisDatum{&curve, conj, 2, std::move(f)};
}

WeilReport verify_weil_datum(const GaloisDatum& d) {
  WeilReport r;
  r.pullback = curves::pullback_check(d.f_sigma, *d.conjugate);
  RationalMap back = conjugate_map(d.f_sigma, *d.conjugate, *d.curve);
  r.cocycle = back.compose(d.f_sigma).is_identity();
  return r;
}

FFE twist(const GaloisDatum& d, const FFE& e) { return d.f_sigma.pullback(conjugate_element(e, *d.conjugate)); }

std::vector<MultiPoly> invariant_generators() {
  auto x = [](int i) { return var(6, i); };
  return {x(1) + x(4),        x(2) + x(5),        x(3) + x(6),
          x(1) * x(4),        x(2) * x(5),        x(3) * x(6),
          x(1) * x(2) + x(4) * x(5), x(1) * x(3) + x(4) * x(6), x(2) * x(3) + x(5) * x(6)};
}

InvariantSystem build_invariants(const GaloisDatum& d) {
  const HyperPair& c = *d.curve;
  if (c.rank() != 2) throw Error(ErrorCode::InvalidArgument, "invariants need a curve in x, y, z");
  WeilReport w = verify_weil_datum(d);
  if (!w.pass()) throw Error(ErrorCode::VerificationFailed, std::string("Weil datum fails ") + (w.pullback ? "cocycle" : "pullback"));
  InvariantSystem inv;
  inv.datum = &d;
  inv.x = {FFE::x(c), FFE::radical(c, 0), FFE::radical(c, 1), d.f_sigma.X(), d.f_sigma.coords()[0], d.f_sigma.coords()[1]};
  for (const auto& g : invariant_generators()) {
    inv.t.push_back(eval_ffe(g, inv.x, c));
    inv.twisted_invariant.push_back(twist(d, inv.t.back()) == inv.t.back());
  }
  if (inv.t[3] != from_cyclo(c, Cyclo(1L)))
    throw Error(ErrorCode::VerificationFailed, "t4 = " + inv.t[3].to_string() + ", expected 1");
  return inv;
}

std::vector<MultiPoly> image_quadrics() {
  auto t = [](int i) { return var(kT, i); };
  auto q = [&](int a, int b, int ab, int ta, int tb) {
    // t_a^2 t_tb - t_a t_b t_ab + t_b^2 t_ta - 4 t_ta t_tb + t_ab^2
    return t(a) * t(a) * t(tb) - t(a) * t(b) * t(ab) + t(b) * t(b) * t(ta) - Cyclo(4L) * t(ta) * t(tb) + t(ab) * t(ab);
  };
  return {q(1, 2, 7, 4, 5), q(1, 3, 8, 4, 6), q(2, 3, 9, 5, 6)};
}

bool QuadricReport::pass() const {
  for (const auto& c : checks)
    if (!c.free_identity || !c.on_curve) return false;
  return !checks.empty();
}

bool vanishes_freely(const MultiPoly& q) {
  auto gens = invariant_generators();
  gens.resize(static_cast<std::size_t>(q.nvars()), MultiPoly(6));
  return q.substitute(gens).is_zero();
}

bool vanishes_in_function_field(const InvariantSystem& inv, const MultiPoly& p) {
  return eval_ffe(p, inv.t, *inv.datum->curve).is_zero();
}

bool vanishes_on_curve(const InvariantSystem& inv, const MultiPoly& p) {
  LaurentRing ring(*inv.datum->curve);
  std::vector<LaurentRing::Elem> values;
  for (const auto& t : inv.t) values.push_back(ring.from_element(t));
  return ring.is_zero(ring.evaluate(p, values));
}

QuadricReport verify_quadric_relations(const InvariantSystem& inv, const std::vector<MultiPoly>& quadrics) {
  QuadricReport r;
  for (const auto& q : quadrics) r.checks.push_back({vanishes_freely(q), vanishes_in_function_field(inv, q)});
  return r;
}

QuadricReport verify_quadric_relations(const InvariantSystem& inv) {
  return verify_quadric_relations(inv, image_quadrics());
}

std::string to_string(PQVariant v) { return v == PQVariant::Displayed ? "displayed" : "curve_C"; }

PQResult derive_pq(int l, PQVariant variant) {
  if (l < 1) throw Error(ErrorCode::OutOfRange, "derive_pq: l must be >= 1");
  PQResult r;
  r.l = l;
  r.variant = variant;
  r.radicand = pq_radicand(l, variant);
  MultiPoly t1 = var(kT, 1), t4 = var(kT, 4);
  // x^n = A x + B, x^(n+1) = (t1 A + B) x - t4 A
  MultiPoly A(kT), B = cst(kT, Cyclo(1L));
  r.P = MultiPoly(kT);
  r.Q = MultiPoly(kT);
  for (int n = 0; n <= r.radicand.degree(); ++n) {
    const Cyclo& c = r.radicand.coeff(n);
    if (!c.is_zero()) {
      r.P += c * A;
      r.Q += c * B;
    }
    MultiPoly nA = t1 * A + B;
    B = -(t4 * A);
    A = std::move(nA);
  }
  return r;
}

bool check_pq_reduction(const InvariantSystem& inv, const PQResult& pq) {
  const HyperPair& c = *inv.datum->curve;
  FFE x = FFE::x(c);
  FFE lhs = eval_ffe(pq.P, inv.t, c) * x + eval_ffe(pq.Q, inv.t, c);
  return lhs == FFE(c, RationalFunction(pq.radicand));
}

MultiPoly expected_P() {
  MultiPoly t1 = var(kT, 1), t4 = var(kT, 4);
  return t1 * (t1 * t1 + Cyclo(2L) * t4 - cst(kT, w3() * w3()));
}

MultiPoly expected_Q() {
  MultiPoly t1 = var(kT, 1), t4 = var(kT, 4), one = cst(kT, Cyclo(1L));
  return (one + t4) * (cst(kT, w3()) + t4) - t1 * t1 * t4;
}

PQComparison compare_with_expected(const PQResult& pq) {
  if (pq.l != 2) throw Error(ErrorCode::OutOfRange, "the displayed P, Q are for l = 2");
  PQComparison c;
  c.expected_P = expected_P();
  c.expected_Q = expected_Q();
  c.p_matches = pq.P == c.expected_P;
  c.q_matches = pq.Q == c.expected_Q;
  auto names = invariant_names();
  auto show = [&](bool ok, const char* what, const MultiPoly& ours, const MultiPoly& theirs) {
    return std::string(what) + (ok ? " matches" : " MISMATCH: computed " + ours.minimized().to_string(names) +
                                                    ", displayed " + theirs.minimized().to_string(names));
  };
  c.verdict = "[" + to_string(pq.variant) + "] " + show(c.p_matches, "P", pq.P, c.expected_P) + "; " +
              show(c.q_matches, "Q", pq.Q, c.expected_Q);
  return c;
}

std::vector<MultiPoly> DescentModel::equations() const {
  std::vector<MultiPoly> e = quadrics;
  e.insert(e.end(), traces.begin(), traces.end());
  return e;
}

bool DescentModel::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

DescentModel derive_descent_system(int l, bool strict) {
  if (l != 2) throw Error(ErrorCode::OutOfRange, "the descent system is derived for l = 2 only");
  DescentModel m;
  m.l = l;
  UniPoly xl = UniPoly::monomial(Cyclo(1L), l);
  Cyclo w = w3(), w2 = w3() * w3();
  UniPoly f = (xl - UniPoly(Cyclo(1L))) * (xl - UniPoly(w2));
  UniPoly g = (xl - UniPoly(w)) * (xl - UniPoly(w2));
  HyperPair curve = HyperPair::make(f, g);
  GaloisDatum datum = case2a_datum(curve, l);
  auto names = invariant_names();

  auto record = [&](std::string name, bool ok, std::string witness, ErrorCode code) {
    m.checks.push_back({name, ok, witness});
    if (strict && !ok) throw Error(code, name + (witness.empty() ? "" : ": " + witness));
  };

  WeilReport wr = verify_weil_datum(datum);
  record("Weil datum (pullback and cocycle)", wr.pass(), wr.pullback ? "cocycle" : "pullback", ErrorCode::VerificationFailed);
  InvariantSystem inv = build_invariants(datum);
  record("t4 = 1 on C", true, "", ErrorCode::VerificationFailed);
  for (int i = 0; i < kT; ++i)
    record("t" + std::to_string(i + 1) + " fixed by the twisted action", inv.twisted_invariant[i], inv.t[i].to_string(),
           ErrorCode::IdentityFailed);

  m.quadrics = image_quadrics();
  QuadricReport qr = verify_quadric_relations(inv, m.quadrics);
  for (std::size_t i = 0; i < qr.checks.size(); ++i) {
    record("quadric " + std::to_string(i + 1) + " free identity", qr.checks[i].free_identity,
           m.quadrics[i].to_string(names), ErrorCode::IdentityFailed);
    record("quadric " + std::to_string(i + 1) + " on C", qr.checks[i].on_curve, m.quadrics[i].to_string(names),
           ErrorCode::IdentityFailed);
  }

  m.pq = derive_pq(l, PQVariant::CurveC);
  PQResult disp = derive_pq(l, PQVariant::Displayed);
  record("P x + Q reduction (curve_C)", check_pq_reduction(inv, m.pq), "", ErrorCode::IdentityFailed);
  record("P x + Q reduction (displayed)", check_pq_reduction(inv, disp), "", ErrorCode::IdentityFailed);
  m.pq_curve = compare_with_expected(m.pq);
  m.pq_displayed = compare_with_expected(disp);

  Symbolic s = symbolic(false);
  auto sp = [&](const MultiPoly& p) { return specialize(p, m.pq.P, m.pq.Q); };
  m.R_num = sp(s.Nr);
  m.R_den = sp(s.Dr);
  m.y_num = sp(s.Ny);
  m.y_den = sp(s.Dy);
  m.z_num = sp(s.Nz);
  m.z_den = sp(s.Dz);

  FFE x = FFE::x(curve), y = FFE::radical(curve, 0), z = FFE::radical(curve, 1);
  auto ev = [&](const MultiPoly& p) { return eval_ffe(p, inv.t, curve); };
  FFE rd = ev(m.R_den);
  record("R denominator nonzero on C", !rd.is_zero(), "", ErrorCode::IdentityFailed);
  FFE r_res = ev(m.R_num) - x * rd;
  record("x = R on C", r_res.is_zero(), r_res.to_string(), ErrorCode::IdentityFailed);
  FFE yd = ev(m.y_den), zd = ev(m.z_den);
  record("y, z denominators nonzero on C", !yd.is_zero() && !zd.is_zero(), "", ErrorCode::IdentityFailed);
  FFE y_res = ev(m.y_num) - y * yd, z_res = ev(m.z_num) - z * zd;
  record("y = y_num / y_den on C", y_res.is_zero(), y_res.to_string(), ErrorCode::IdentityFailed);
  record("z = z_num / z_den on C", z_res.is_zero(), z_res.to_string(), ErrorCode::IdentityFailed);

  Symbolic typo = symbolic(true);
  m.r_identity_displayed_B = (ev(specialize(typo.Nr, m.pq.P, m.pq.Q)) - x * ev(specialize(typo.Dr, m.pq.P, m.pq.Q))).is_zero();
  Display d = displayed_fractions();
  m.y_display = compare_display(d.y_num, d.den, false);
  m.z_display = compare_display(d.z_num, d.den, true);

  MultiPoly dr4 = m.R_den.pow(2 * l);
  m.E = m.y_num * m.y_num * dr4 - m.y_den * m.y_den * homogenize(f, m.R_num, m.R_den);
  m.F = m.z_num * m.z_num * dr4 - m.z_den * m.z_den * homogenize(g, m.R_num, m.R_den);
  record("E vanishes on C", vanishes_on_curve(inv, m.E), "", ErrorCode::IdentityFailed);
  record("F vanishes on C", vanishes_on_curve(inv, m.F), "", ErrorCode::IdentityFailed);

  MultiPoly Es = m.E.galois(-1), Fs = m.F.galois(-1);
  m.traces = {m.E + Es, w * m.E + w2 * Es, m.F + Fs, w * m.F + w2 * Fs};
  const char* trace_names[] = {"E + E^s", "w E + w^2 E^s", "F + F^s", "w F + w^2 F^s"};
  for (std::size_t i = 0; i < m.traces.size(); ++i) {
    record(std::string(trace_names[i]) + " has rational coefficients", m.traces[i].has_rational_coeffs(),
           first_irrational(m.traces[i], names), ErrorCode::RationalityFailed);
    m.traces[i] = m.traces[i].minimized();
  }
  auto eqs = m.equations();
  for (std::size_t i = 0; i < eqs.size(); ++i)
    record("equation " + std::to_string(i + 1) + " vanishes on C", vanishes_on_curve(inv, eqs[i]), "",
           ErrorCode::IdentityFailed);
  return m;
}

std::string DescentModel::to_markdown() const {
  auto names = invariant_names();
  std::ostringstream o;
  o << "## Rational model, l = " << l << "\n\n";
  o << "C: y^2 = " << pq.radicand.to_string() << ", z^2 = x^4 + x^2 + 1\n\n";
  o << "- P = `" << pq.P.minimized().to_string(names) << "`\n";
  o << "- Q = `" << pq.Q.minimized().to_string(names) << "`\n";
  o << "- " << pq_curve.verdict << "\n";
  o << "- " << pq_displayed.verdict << "\n";
  o << "- x = R: numerator " << R_num.size() << " terms, denominator " << R_den.size() << " terms\n";
  o << "- R with the displayed B = t2(2t7 - t1): " << (r_identity_displayed_B ? "identity holds" : "identity fails") << "\n";
  auto disp = [&](const char* which, const DisplayComparison& c) {
    o << "- displayed " << which << ": " << (c.matches ? "matches" : "does not match")
      << " the recomputation; with the displayed B: " << (c.matches_with_displayed_B ? "matches" : "does not match")
      << (c.negated_with_displayed_B ? " (numerator and denominator negated)" : "") << "\n";
  };
  disp("y", y_display);
  disp("z", z_display);
  o << "- E: " << E.size() << " terms, degree " << E.total_degree() << "; F: " << F.size() << " terms, degree "
    << F.total_degree() << "\n\n";
  o << "### Equations\n\n";
  const char* labels[] = {"", "", "", "E + E^s", "w3 E + w3^2 E^s", "F + F^s", "w3 F + w3^2 F^s"};
  auto eqs = equations();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i < 3)
      o << i + 1 << ". `" << eqs[i].to_string(names) << " = 0`\n";
    else
      o << i + 1 << ". " << labels[i] << " = 0 (" << eqs[i].size() << " terms, degree " << eqs[i].total_degree()
        << ")\n";
  }
  o << "\n### Checks\n\n";
  for (const auto& c : checks) o << "- [" << (c.pass ? "x" : " ") << "] " << c.name << "\n";
  return o.str();
}

}  // namespace qplab::descent
