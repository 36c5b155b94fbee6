#include "qplab/curves/verify.hpp"

#include <random>

#include "qplab/errors.hpp"
#include "qplab/groups/morphisms.hpp"

namespace qplab::curves {

namespace {

algebra::Integer binom(int n, int k) {
  algebra::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

UniPoly xpow(int k) { return UniPoly::monomial(Cyclo(1L), k); }

}  // namespace

CurveVerification verify_case(const CaseModel& model, unsigned seed) {
  CurveVerification v;
  std::mt19937_64 rng(seed);
  bool ok = true;
  for (const auto& [name, h] : model.maps) {
    v.pullback[name] = pullback_check(h);
    RationalMap inv = map_inverse(h);
    v.pullback[name + "^-1"] = pullback_check(inv) && h.compose(inv).is_identity();
    ok &= v.pullback[name] && v.pullback[name + "^-1"];
    v.float_residual = std::max(v.float_residual, float_pullback_residual(h, rng));
    v.float_residual = std::max(v.float_residual, float_compose_residual(h, inv, rng));
  }
  v.deck = verify_group_relations(model.maps, model.deck_presentation);
  ok &= v.deck.pass;
  if (model.aut_presentation) {
    v.aut = verify_group_relations(model.maps, *model.aut_presentation);
    ok &= v.aut->pass;
  }
  if (model.kind == Case::One) {
    v.bt = verify_group_relations(model.maps, case1_bt_presentation(model.m));
    ok &= v.bt->pass;
  }
  const auto& a = model.maps.at("a");
  const auto& b = model.maps.at("b");
  const auto& t = model.maps.at("t");
  auto deck = map_closure({a, b, t}, {"a", "b", "t"});
  v.deck_closure_order = static_cast<int>(deck.elements.size());
  v.deck_isomorphic = groups::is_isomorphic(deck.group, groups::build_semidirect(model.m, model.action));
  ok &= v.deck_closure_order == 4 * model.m && v.deck_isomorphic;
  if (model.maps.count("u")) {
    auto full = map_closure({a, b, t, model.maps.at("u")}, {"a", "b", "t", "u"});
    v.full_closure_order = static_cast<int>(full.elements.size());
    ok &= v.full_closure_order == 8 * model.m;
  }
  v.belyi = verify_belyi(model.maps, {"a", "b", "t"}, model.m);
  ok &= v.belyi.pass;
  if (model.maps.count("u")) {
    v.beta_not_invariant_under_u = !v.belyi.invariant.at("u");
    ok &= v.beta_not_invariant_under_u;
  }
  ok &= v.float_residual < 1e-9;
  v.pass = ok;
  return v;
}

UniPoly case2a_sa_model(int l) {
  UniPoly one_minus_v2 = UniPoly(1L) - xpow(2);
  UniPoly p = one_minus_v2.pow(l);
  for (int j = 0; j <= l; ++j) p += UniPoly::monomial(Cyclo(algebra::Rational(2 * binom(2 * l, 2 * j))), 2 * j);
  return p;
}

UniPoly case2a_sa1(int l) {
  UniPoly p = (UniPoly(1L) - xpow(1)).pow(l);
  for (int j = 0; j <= l; ++j) p += UniPoly::monomial(Cyclo(algebra::Rational(2 * binom(2 * l, 2 * j))), j);
  return p;
}

std::optional<ModelIsomorphism> model_isomorphism_search(const HyperPair& c1, const HyperPair& c2, IsoFamily family,
                                                         int max_order) {
  if (family == IsoFamily::Scaling) return find_scaling_isomorphism(c1, c2, max_order);
  if (c1.rank() != 1 || c2.rank() != 1) return std::nullopt;
  const int deg = c1.f().degree();
  if (deg < 4 || deg % 2 != 0) return std::nullopt;
  const int l = deg / 2;
  if (!(c1.f() == xpow(2 * l) + xpow(l) + UniPoly(1L)) || !(c2.f() == case2a_sa_model(l))) return std::nullopt;
  RationalFunction xr = RationalFunction::x();
  RationalFunction v = (xr - RationalFunction(1L)) / (xr + RationalFunction(1L));
  RationalFunction s = (RationalFunction(2L) / (xr + RationalFunction(1L))).pow(l);
  RationalMap forward(c1, c2, FFE(c1, v), {FFE::radical(c1, 0).scaled(s)});
  RationalFunction xback = (RationalFunction(1L) + xr) / (RationalFunction(1L) - xr);
  RationalFunction sback = (RationalFunction(1L) / (RationalFunction(1L) - xr)).pow(l);
  RationalMap backward(c2, c1, FFE(c2, xback), {FFE::radical(c2, 0).scaled(sback)});
  if (!verify_isomorphism(forward, backward)) return std::nullopt;
  return ModelIsomorphism{forward, backward};
}

namespace {

// A degree-two quotient map q : source -> target, checked exactly and for invariance under h.
bool check_quotient(const RationalMap& q, const RationalMap& h) {
  return pullback_check(q) && q.compose(h) == q;
}

}  // namespace

std::vector<QuotientFactor> derive_quotient_factors(Case kind, int param) {
  auto model = make_case(kind, param);
  const HyperPair& S = model->curve;
  const FFE X = FFE::x(S), Y = FFE::radical(S, 0), Z = FFE::radical(S, 1);
  const auto& a = model->maps.at("a");
  const auto& b = model->maps.at("b");
  const RationalMap ab = a.compose(b);
  std::vector<QuotientFactor> out;

  // S_a: (x, z); S_b: (x, y); S_ab: (x, yz / gcd(f, g))
  HyperPair Sa = HyperPair::hyperelliptic(S.g(), "z");
  HyperPair Sb = HyperPair::hyperelliptic(S.f(), "y");
  UniPoly h = algebra::gcd(S.f(), S.g());
  UniPoly fab = (S.f().divmod(h).first) * (S.g().divmod(h).first);
  HyperPair Sab = HyperPair::hyperelliptic(fab, "w");
  RationalMap qa(S, Sa, X, {Z});
  RationalMap qb(S, Sb, X, {Y});
  RationalMap qab(S, Sab, X, {(Y * Z).scaled(RationalFunction(h).inverse())});
  out.push_back({"S_a", Sa.f(), hyperelliptic_genus(Sa.f()), check_quotient(qa, a)});
  out.push_back({"S_b", Sb.f(), hyperelliptic_genus(Sb.f()), check_quotient(qb, b)});
  out.push_back({"S_ab", fab, hyperelliptic_genus(fab), check_quotient(qab, ab)});

  if (kind == Case::TwoA) {
    const int l = param;
    HyperPair M = HyperPair::hyperelliptic(case2a_sa_model(l), "w");
    auto found = model_isomorphism_search(Sa, M, IsoFamily::CayleyMap);
    bool iso = found.has_value();
    if (!iso) throw Error(ErrorCode::VerificationFailed, "case 2a: S_a model substitution");
    const RationalMap& to_model = found->forward;
    const RationalMap& from_model = found->backward;
    RationalFunction xr = RationalFunction::x();
    RationalFunction vr = RationalFunction::x();
    // d(v, w) = (-v, w) and j o d = (-v, -w)
    RationalMap d(M, M, FFE(M, -vr), {FFE::radical(M, 0)});
    RationalMap jd(M, M, FFE(M, -vr), {-FFE::radical(M, 0)});
    // d corresponds to (x, z) -> (1/x, z/x^l) on S_a
    RationalMap d_sa(Sa, Sa, FFE(Sa, RationalFunction(1L) / xr),
                     {FFE::radical(Sa, 0).scaled(RationalFunction(xpow(l)).inverse())});
    bool d_match = from_model.compose(d).compose(to_model) == d_sa && pullback_check(d_sa);
    UniPoly p1 = case2a_sa1(l);
    UniPoly p2 = xpow(1) * p1;
    HyperPair S1 = HyperPair::hyperelliptic(p1, "w1");
    HyperPair S2 = HyperPair::hyperelliptic(p2, "w2");
    RationalMap q1(M, S1, FFE(M, vr * vr), {FFE::radical(M, 0)});
    RationalMap q2(M, S2, FFE(M, vr * vr), {FFE::radical(M, 0).scaled(vr)});
    out.push_back({"S_a1", p1, hyperelliptic_genus(p1), iso && d_match && check_quotient(q1, d)});
    out.push_back({"S_a2", p2, hyperelliptic_genus(p2), iso && d_match && check_quotient(q2, jd)});
  } else {
    // d(x, z) = (-x, z) is induced by t^(m/2); quotients (x^2, z) and (x^2, x z)
    const auto& t = model->maps.at("t");
    RationalMap tq = t.pow(model->m / 2);
    RationalFunction xr = RationalFunction::x();
    RationalMap d(Sa, Sa, FFE(Sa, -xr), {FFE::radical(Sa, 0)});
    RationalMap jd(Sa, Sa, FFE(Sa, -xr), {-FFE::radical(Sa, 0)});
    bool induced = qa.compose(tq) == d.compose(qa) || qa.compose(tq) == jd.compose(qa);
    UniPoly half = S.g().divmod(UniPoly(1L)).first;  // x^(2k) - 1 -> v^k - 1
    std::vector<Cyclo> hc;
    for (int i = 0; i <= half.degree(); i += 2) hc.push_back(half.coeff(i));
    UniPoly p1(hc);
    UniPoly p2 = xpow(1) * p1;
    HyperPair S1 = HyperPair::hyperelliptic(p1, "w1");
    HyperPair S2 = HyperPair::hyperelliptic(p2, "w2");
    RationalMap q1(Sa, S1, FFE(Sa, xr * xr), {FFE::radical(Sa, 0)});
    RationalMap q2(Sa, S2, FFE(Sa, xr * xr), {FFE::radical(Sa, 0).scaled(xr)});
    out.push_back({"S_a1", p1, hyperelliptic_genus(p1), induced && check_quotient(q1, d)});
    out.push_back({"S_a2", p2, hyperelliptic_genus(p2), induced && check_quotient(q2, jd)});
  }
  return out;
}

}  // namespace qplab::curves
