#include "qplab/app/commands.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "qplab/covering/generating_vectors.hpp"
#include "qplab/covering/lemma_classifier.hpp"
#include "qplab/curves/cases.hpp"
#include "qplab/curves/fermat.hpp"
#include "qplab/curves/verify.hpp"
#include "qplab/descent/descent.hpp"
#include "qplab/errors.hpp"
#include "qplab/fp/maximality.hpp"
#include "qplab/fp/todd_coxeter.hpp"
#include "qplab/groups/constructors.hpp"
#include "qplab/groups/morphisms.hpp"
#include "qplab/groups/subgroups.hpp"
#include "qplab/jacobian/group_algebra_decomposition.hpp"
#include "qplab/jacobian/kani_rosen.hpp"
#include "qplab/rep/character_table.hpp"

namespace qplab::app {

using covering::Signature;
using curves::Case;
using groups::Action;
using groups::FiniteGroup;
using groups::Subgroup;

namespace {

constexpr int kMaxM = 50;  // |G| = 4m <= 200 for the generating-vector search

std::string str(int v) { return std::to_string(v); }

template <class T>
std::string join_list(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::ostringstream o;
  for (std::size_t i = 0; i < xs.size(); ++i) o << (i ? sep : "") << xs[i];
  return o.str();
}

std::vector<Action> actions_for(int m) {
  std::vector<Action> a;
  if (m % 2 == 0) a.push_back(Action::I);
  if (m % 3 == 0) a.push_back(Action::II);
  return a;
}

int require_m(const RunSpec& s) {
  if (!s.m) throw UsageError(s.command + " needs --m");
  return *s.m;
}

Case case_of(const RunSpec& s) {
  if (!s.kase) throw UsageError(s.command + " needs --case");
  return curves::parse_case(*s.kase);
}

int case_param(const RunSpec& s) { return case_of(s) == Case::One ? *s.q : *s.l; }

Action action_of(const RunSpec& s, int m) {
  if (s.action) return groups::parse_action(*s.action);
  if (m % 3 == 0) return Action::II;
  if (m % 2 == 0) return Action::I;
  throw UsageError("no action of Z_m on the Klein group is defined for m = " + str(m));
}

const char* anchor_for(Case c) {
  switch (c) {
    case Case::One: return "curve model, case 1";
    case Case::TwoA: return "curve model, case 2a";
    case Case::TwoB: return "curve model, case 2b";
  }
  return "";
}

// ------------------------------------------------------------------ signature

Report cmd_signature(const RunSpec& s) {
  Report r;
  r.spec = s;
  const int m = require_m(s);
  for (Action act : actions_for(m)) {
    if (s.action && groups::parse_action(*s.action) != act) continue;
    auto G = groups::build_semidirect(m, act);
    for (Signature sig : {Signature(0, {2, m, m}), Signature(0, {2, m, 2 * m})}) {
      bool exists = covering::has_generating_vector(G, sig);
      bool expect = sig.periods[2] == m ? (act == Action::II || m % 4 == 0) : (act == Action::I && m % 4 == 2 && m >= 6);
      std::string w = exists ? "realizable, genus " + str(covering::genus_from_rh(G.order(), sig)) : "no generating vector";
      r.add(sig.to_string() + " under action " + groups::to_string(act) + (expect ? " realizable" : " empty"),
            "signature classification", exists == expect, w);
      r.details[groups::to_string(act)][sig.to_string()] = exists;
    }
  }
  if (r.checks.empty()) r.info("no action defined", "signature classification", "m = " + str(m));
  return r;
}

// ------------------------------------------------------------------ classify-h

Report cmd_classify_h(const RunSpec& s) {
  Report r;
  r.spec = s;
  const int m = require_m(s);
  if (m < 3 || m > 64) throw UsageError("classify-h needs 3 <= m <= 64");
  auto pg = covering::lemma1_classify(m, covering::LemmaMethod::ProofGuided);
  std::size_t expect = (m % 3 == 0) + (m % 4 == 0);
  r.add("number of invariant subspaces", "subspace lemma", pg.size() == expect,
        str(static_cast<int>(pg.size())) + " found, " + str(static_cast<int>(expect)) + " expected");
  if (m <= 13) {
    auto bf = covering::lemma1_classify(m, covering::LemmaMethod::BruteForce);
    r.add("brute force agrees with the proof-guided classifier", "subspace lemma", bf == pg,
          str(static_cast<int>(bf.size())) + " subspaces by brute force");
  } else {
    r.info("brute force skipped", "subspace lemma", "dimension 2^(m-1) too large");
  }
  std::set<algebra::GF2Matrix> got(pg.begin(), pg.end());
  if (m % 4 == 0)
    r.add("span of a_j + a_{j+2} present", "subspace lemma", got.count(covering::lemma_cyclic_span(m, {2})) == 1);
  if (m % 3 == 0)
    r.add("span of a_j + a_{j+1} + a_{j+2} present", "subspace lemma",
          got.count(covering::lemma_cyclic_span(m, {1, 2})) == 1);
  Json subs = Json::array();
  for (const auto& H : pg) subs.push_back(H.to_string());
  r.details["subspaces"] = subs;
  return r;
}

// ------------------------------------------------------------------ verify-curve

std::string fixed_witness(const FiniteGroup& G, const covering::GeneratingVector& v, const std::vector<int>& els,
                          std::vector<int>& counts) {
  std::vector<std::string> parts;
  for (int h : els) {
    counts.push_back(covering::fixed_point_count(v, h));
    parts.push_back(G.name(h) + ": " + str(counts.back()));
  }
  return join_list(parts);
}

Report cmd_verify_curve(const RunSpec& s, const Config& cfg) {
  Report r;
  r.spec = s;
  Case kind = case_of(s);
  auto model = curves::make_case(kind, case_param(s));
  const int m = model->m;
  const std::string anchor = anchor_for(kind);
  r.details["curve"] = model->curve.to_string();
  r.details["genus"] = model->genus;
  auto v = curves::verify_case(*model);
  for (const auto& [name, ok] : v.pullback) r.add("pullback " + name, anchor, ok);
  auto relation_witness = [](const curves::RelationReport& rr) {
    std::vector<std::string> bad;
    for (const auto& c : rr.relators)
      if (!c.pass) bad.push_back(c.relator);
    return bad.empty() ? std::string("all relators trivial") : "failing: " + join_list(bad);
  };
  r.add("deck relations on a, b, t", anchor, v.deck.pass, relation_witness(v.deck));
  if (v.bt) r.add("presentation on b, t", anchor, v.bt->pass, relation_witness(*v.bt));
  if (v.aut) r.add("Aut relations on t, u", anchor, v.aut->pass, relation_witness(*v.aut));
  r.add("closure of {a, b, t} has order 4m", anchor, v.deck_closure_order == 4 * m, "order " + str(v.deck_closure_order));
  r.add("closure of {a, b, t} is isomorphic to the semidirect product", anchor, v.deck_isomorphic);
  if (kind != Case::One)
    r.add("closure of {a, b, t, u} has order 8m", anchor, v.full_closure_order == 8 * m,
          "order " + str(v.full_closure_order));
  r.add("x^m invariant under a, b, t", "Belyi map", v.belyi.pass);
  if (kind != Case::One) r.add("x^m not invariant under u", "Belyi map", v.beta_not_invariant_under_u);
  r.add("float cross-check residual below 1e-9", anchor, v.float_residual < 1e-9, std::to_string(v.float_residual));

  // fixed points from the generating vector
  auto G = groups::build_semidirect(m, model->action);
  auto census = covering::enumerate_generating_vectors(G, model->signature);
  if (census.vectors.empty()) {
    r.add("generating vector exists", anchor, false, model->signature.to_string());
    return r;
  }
  const auto& gv = census.vectors.front();
  int a = G.gen("a"), b = G.gen("b"), ab = G.mul(a, b);
  std::vector<int> fc;
  std::string w = fixed_witness(G, gv, {a, b, ab}, fc);
  if (kind == Case::TwoA) {
    r.add("a, b, ab have 2m/3 fixed points each", "fixed points", fc[0] == 2 * m / 3 && fc[1] == fc[0] && fc[2] == fc[0], w);
  } else if (kind == Case::TwoB) {
    std::vector<int> sorted = fc;
    std::sort(sorted.begin(), sorted.end());
    r.add("two involutions with m fixed points, their product free", "fixed points",
          sorted == std::vector<int>{0, m, m}, w);
  } else {
    r.info("fixed points of the Klein involutions", "fixed points", w);
  }

  if (model->aut_presentation) {
    auto A = fp::cayley_from_presentation(*model->aut_presentation, cfg.coset_limit);
    r.add("Aut presentation has order 8m", "automorphism group", A.order() == 8 * m, "order " + str(A.order()));
    int found = 0;
    for (const auto& H : groups::all_subgroups(A)) {
      if (H.order() != 4 || groups::is_cyclic(A, H) || !groups::is_normal(A, H)) continue;
      if (groups::is_isomorphic(groups::quotient_group(A, H).group, groups::dihedral(m))) ++found;
    }
    r.add("quotient by a normal Klein subgroup is dihedral of order 2m", "automorphism group", found >= 1);
    int t = A.gen("t"), u = A.gen("u");
    covering::GeneratingVector av{&A, {A.inv(A.mul(u, t)), u, t}, Signature(0, {2, 4, m})};
    bool valid = true;
    try {
      av.validate();
    } catch (const Error&) {
      valid = false;
    }
    r.add("((ut)^-1, u, t) is a generating vector of type (0;2,4,m)", "automorphism group", valid);
    if (valid) {
      auto Z = groups::center(A);
      std::vector<int> inv;
      for (int z : Z.elements)
        if (z != 0 && A.element_order(z) == 2) inv.push_back(z);
      std::vector<int> zc;
      std::string zw = fixed_witness(A, av, inv, zc);
      if (kind == Case::TwoA && m == 6)
        r.add("the central involution of <t, u> has 8 fixed points", "fixed points", zc == std::vector<int>{8}, zw);
      else
        r.info("fixed points of central involutions of <t, u>", "fixed points", inv.empty() ? "none" : zw);
      if (kind == Case::TwoA && m == 6)
        r.add("<t, u> is Z2 x S4", "automorphism group",
              groups::is_isomorphic(A, groups::direct_product(groups::cyclic(2), groups::symmetric(4))));
    }
  }

  Json factors = Json::array();
  for (const auto& f : curves::derive_quotient_factors(kind, case_param(s))) {
    r.add("quotient " + f.label + ": w^2 = " + f.poly.to_string(), "elliptic factors", f.verified,
          "genus " + str(f.genus));
    factors.push_back({{"label", f.label}, {"poly", f.poly.to_string()}, {"genus", f.genus}});
  }
  r.details["quotients"] = factors;
  return r;
}

// ------------------------------------------------------------------ chartable

Report cmd_chartable(const RunSpec& s) {
  Report r;
  r.spec = s;
  const int m = require_m(s);
  Action act = action_of(s, m);
  auto G = groups::build_semidirect(m, act);
  auto t = rep::character_table(G);
  int sq = 0;
  std::vector<int> degrees;
  for (int i = 0; i < t.nchars(); ++i) {
    degrees.push_back(t.degree(i));
    sq += degrees.back() * degrees.back();
  }
  r.add("sum of squared degrees is |G|", "character table", sq == G.order(), str(sq));
  r.add("as many characters as classes", "character table", t.nchars() == t.nclasses(), str(t.nclasses()) + " classes");
  bool ortho = true;
  for (int i = 0; i < t.nchars(); ++i)
    for (int j = 0; j < t.nchars(); ++j)
      if (rep::inner_product(t, i, j) != algebra::Cyclo(i == j ? 1L : 0L)) ortho = false;
  r.add("row orthogonality", "character table", ortho);
  auto fams = rep::rational_irreps(t);
  Json fj = Json::array();
  std::vector<std::string> fam_text;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    std::vector<std::string> rows;
    for (int row : fams[i].orbit) rows.push_back("V" + str(row + 1));
    fam_text.push_back("W" + str(static_cast<int>(i) + 1) + " = " + join_list(rows, " + "));
    fj.push_back({{"orbit", fams[i].orbit}, {"k", fams[i].k}});
  }
  r.info("rational families", "character table", join_list(fam_text, "; "));
  r.details["degrees"] = degrees;
  r.details["families"] = fj;
  r.markdown = rep::to_markdown(t);
  return r;
}

// ------------------------------------------------------------------ decompose

std::vector<std::vector<int>> conjugacy_grouping(const FiniteGroup& G, const std::vector<Subgroup>& subs) {
  return groups::subgroup_conjugacy_classes(G, subs);
}

Report cmd_decompose(const RunSpec& s) {
  Report r;
  r.spec = s;
  Case kind = case_of(s);
  auto model = curves::make_case(kind, case_param(s));
  const int m = model->m;
  auto G = groups::build_semidirect(m, model->action);
  auto census = covering::enumerate_generating_vectors(G, model->signature);
  if (census.vectors.empty()) throw Error(ErrorCode::Internal, "no generating vector for " + model->signature.to_string());
  const auto& v = census.vectors.front();
  const int g = v.surface_genus();
  auto t = rep::character_table(G);

  auto ga = jacobian::group_algebra_decomposition(v, t);
  std::vector<std::string> parts;
  std::vector<int> nonzero;
  for (const auto& f : ga.factors)
    if (f.dimension > 0) parts.push_back(f.label + (f.multiplicity > 1 ? "^" + str(f.multiplicity) : ""));
  auto dims = jacobian::rojas_dimensions(v, t);
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i].dimension > 0) nonzero.push_back(static_cast<int>(i));
  r.add("group algebra decomposition sums to the genus", "group algebra decomposition", ga.total == g,
        "JS ~ " + join_list(parts, " x ") + ", genus " + str(g));
  Json dj = Json::array();
  for (const auto& d : dims) dj.push_back({{"orbit", d.orbit}, {"dimension", d.dimension}, {"multiplicity", d.multiplicity}});
  r.details["families"] = dj;

  std::vector<std::string> summary;
  for (int fi : nonzero) {
    auto found = jacobian::jimenez_subgroup_search(v, t, fi);
    auto classes = conjugacy_grouping(G, found);
    std::vector<std::string> reps;
    for (const auto& cl : classes) reps.push_back(jacobian::describe(G, found[cl.front()]));
    const auto& fam = ga.factors[fi];
    summary.push_back(fam.label + "^" + str(dims[fi].multiplicity) + ", dim " + fam.label + " = " +
                      str(dims[fi].dimension) + ", H = " + join_list(reps, " or "));
    r.info("subgroups H with dim V^H = 1 for " + fam.label, "subgroup search",
           str(static_cast<int>(found.size())) + " subgroups in " + str(static_cast<int>(classes.size())) +
               " classes: " + join_list(reps));
  }
  r.details["summary"] = "JS ~ " + join_list(summary, "; ");

  int a = G.gen("a"), b = G.gen("b");
  std::vector<Subgroup> klein{groups::subgroup_generated(G, {a}), groups::subgroup_generated(G, {b}),
                              groups::subgroup_generated(G, {G.mul(a, b)})};
  try {
    auto kr = jacobian::kani_rosen_check(v, klein, {"S_a", "S_b", "S_ab"});
    std::vector<std::string> fs;
    for (const auto& f : kr.factors) fs.push_back(f.label + " (genus " + str(f.dimension) + ")");
    r.add("Kani-Rosen over <a>, <b>, <ab>", "Kani-Rosen decomposition", kr.total == g, join_list(fs));
    if (kind != Case::TwoA) {
      int d = G.pow(G.gen("t"), m / 2);
      auto ref = jacobian::refine_factor(v, klein[0], d, b);
      std::vector<int> genera;
      for (const auto& f : kr.factors)
        if (f.label != "S_a") genera.push_back(f.dimension);
      for (const auto& f : ref.factors) genera.push_back(f.dimension);
      std::sort(genera.begin(), genera.end());
      r.add("refinement of S_a by <a, t^(m/2)> and <a, b t^(m/2)>", "Kani-Rosen decomposition",
            ref.factors[0].dimension + ref.factors[1].dimension == ref.genus,
            "factor genera " + join_list(genera));
      r.details["refined_genera"] = genera;
    }
  } catch (const Error& e) {
    r.add("Kani-Rosen over <a>, <b>, <ab>", "Kani-Rosen decomposition", false, e.what());
  }
  return r;
}

// ------------------------------------------------------------------ maximality

Report cmd_maximality(const RunSpec& s) {
  Report r;
  r.spec = s;
  Case kind = case_of(s);
  fp::NormalityReport n;
  int expected_index = 0;
  if (kind == Case::One) {
    n = fp::case1_uniformizing_subgroup(*s.q);
    expected_index = 24 * *s.q;
  } else if (kind == Case::TwoB) {
    n = fp::case2b_uniformizing_subgroup(curves::aut_presentation_2b(*s.m), *s.m);
    expected_index = 24 * *s.m;
  } else {
    throw UsageError("maximality covers cases 1 and 2b");
  }
  r.add(n.label + " has index " + str(expected_index), "maximality", n.index == expected_index, str(n.index));
  r.add(n.label + " is not normal", "maximality", !n.normal,
        "group induced on the cosets has order " + str(n.induced_order) + " (index " + str(n.index) + ")");
  r.details["index"] = n.index;
  r.details["induced_order"] = n.induced_order;
  r.details["normal"] = n.normal;
  return r;
}

// ------------------------------------------------------------------ descent

Json serialize(const algebra::MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> e(mono.begin(), mono.begin() + p.nvars());
    terms.push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  }
  return terms;
}

Report cmd_descent(const RunSpec& s) {
  Report r;
  r.spec = s;
  auto model = descent::derive_descent_system(*s.l, false);
  for (const auto& c : model.checks) r.add(c.name, "Weil descent", c.pass, c.witness);
  r.info("P, Q against the expected closed forms", "Weil descent", model.pq_curve.verdict + " | " + model.pq_displayed.verdict);
  r.info("displayed y fraction", "Weil descent",
         std::string(model.y_display.matches ? "matches" : "differs from") + " the recomputation; " +
             (model.y_display.matches_with_displayed_B ? "agrees" : "disagrees") + " once B = t2(2t7 - t1) is used");
  r.info("displayed z fraction", "Weil descent",
         std::string(model.z_display.matches ? "matches" : "differs from") + " the recomputation; " +
             (model.z_display.matches_with_displayed_B ? "agrees" : "disagrees") + " once B = t2(2t7 - t1) is used");
  Json eqs = Json::array();
  for (const auto& e : model.equations()) eqs.push_back(serialize(e));
  r.details["variables"] = descent::invariant_names();
  r.details["equations"] = eqs;
  r.markdown = model.to_markdown();
  return r;
}

// ------------------------------------------------------------------ fermat-action

Report cmd_fermat(const RunSpec& s) {
  Report r;
  r.spec = s;
  const int m = require_m(s);
  if (m < 5 || m > 8) throw UsageError("fermat-action needs 5 <= m <= 8");
  auto f = curves::verify_fermat_action(m);
  const char* anchor = "generalized Fermat curve";
  r.add("T preserves the curve", anchor, f.t_preserves_curve);
  r.add("U preserves the curve", anchor, f.u_preserves_curve);
  r.add("pi o T = T~ o pi", anchor, f.pi_t);
  r.add("pi o U = U~ o pi", anchor, f.pi_u);
  bool conj = !f.t_conjugation.empty() && std::all_of(f.t_conjugation.begin(), f.t_conjugation.end(), [](bool b) { return b; });
  r.add("T o a_j = a_{j+1} o T for all j", anchor, conj);
  r.add("U^2 in F", anchor, f.u_squared_in_f);
  r.add("T has order m modulo scalars", anchor, f.t_order_m);
  r.add("(UT)^2 in F", anchor, f.dihedral);
  r.add("1 + (g_C - 1)/2^(m-3) = m - 3", anchor, f.genus_consistent, "g_C = " + std::to_string(f.genus_c));
  r.add("float residual below 1e-9", anchor, f.float_residual < 1e-9, std::to_string(f.float_residual));
  std::vector<std::string> alphas;
  for (const auto& a : f.alpha) alphas.push_back(a.text);
  r.info("solved alpha", anchor, join_list(alphas));
  r.details["alpha"] = alphas;
  r.details["failures"] = f.failures;
  return r;
}

// ------------------------------------------------------------------ census

Report cmd_census(const RunSpec& s) {
  Report r;
  r.spec = s;
  const int m = require_m(s);
  Json rows = Json::array();
  for (Action act : actions_for(m)) {
    if (s.action && groups::parse_action(*s.action) != act) continue;
    auto G = groups::build_semidirect(m, act);
    auto K = groups::subgroup_generated(G, {G.gen("a"), G.gen("b")});
    for (Signature sig : {Signature(0, {2, m, m}), Signature(0, {2, m, 2 * m})}) {
      auto c = covering::enumerate_generating_vectors(G, sig);
      if (c.vectors.empty()) continue;
      std::map<int, int> genus_by_orbit;
      for (std::size_t i = 0; i < c.vectors.size(); ++i)
        genus_by_orbit.emplace(c.aut_orbit[i], covering::quotient_genus(c.vectors[i], K).genus);
      int spherical = 0;
      std::vector<std::string> gs;
      for (auto [o, g] : genus_by_orbit) {
        gs.push_back(str(g));
        if (g == 0) ++spherical;
      }
      std::string label = sig.to_string() + " under action " + groups::to_string(act);
      std::string w = str(static_cast<int>(c.vectors.size())) + " vectors, " + str(c.aut_orbits) + " Aut-orbits, " +
                      str(c.braid_orbits) + " braid orbits; genus of S/<a,b> per orbit: " + join_list(gs);
      r.add(label + ": one Aut(G)-orbit", "uniqueness", c.aut_orbits == 1, w);
      r.add(label + ": one orbit with S/<a,b> of genus 0", "uniqueness", spherical == 1);
      rows.push_back({{"action", groups::to_string(act)},
                      {"signature", sig.to_string()},
                      {"vectors", c.vectors.size()},
                      {"aut_orbits", c.aut_orbits},
                      {"braid_orbits", c.braid_orbits},
                      {"klein_quotient_genera", gs}});
    }
  }
  if (rows.empty()) r.info("no quasiplatonic actions", "uniqueness", "m = " + str(m));
  r.details["census"] = rows;
  return r;
}

// ------------------------------------------------------------------ full

Report cmd_full(const RunSpec& s, const Config& cfg) {
  const int m = require_m(s);
  std::vector<RunSpec> parts;
  auto add = [&](std::string cmd, std::optional<std::string> kase = std::nullopt, std::optional<std::string> act = std::nullopt) {
    RunSpec p;
    p.command = std::move(cmd);
    p.m = m;
    p.kase = std::move(kase);
    p.action = std::move(act);
    parts.push_back(validate(p));
  };
  add("signature");
  if (m <= 64) add("classify-h");
  for (Action a : actions_for(m)) add("chartable", std::nullopt, groups::to_string(a));
  add("census");
  std::vector<std::string> cases;
  if (m % 4 == 2 && m >= 6) cases.push_back("1");
  if (m % 3 == 0 && m >= 6) cases.push_back("2a");
  if (m % 4 == 0 && m >= 8) cases.push_back("2b");
  for (const auto& c : cases) {
    add("verify-curve", c);
    add("decompose", c);
  }
  if (m == 6 || m == 10) add("maximality", std::string("1"));
  if (m == 8) add("maximality", std::string("2b"));
  if (m >= 5 && m <= 8) add("fermat-action");
  if (m == 6) {
    RunSpec p;
    p.command = "descent";
    p.l = 2;
    parts.push_back(validate(p));
  }

  std::vector<Report> results(parts.size());
  if (cfg.jobs > 1) {
    for (std::size_t start = 0; start < parts.size(); start += static_cast<std::size_t>(cfg.jobs)) {
      std::vector<std::future<Report>> fs;
      for (std::size_t i = start; i < std::min(parts.size(), start + static_cast<std::size_t>(cfg.jobs)); ++i)
        fs.push_back(std::async(std::launch::async, [&, i] { return dispatch(parts[i], cfg); }));
      for (std::size_t i = 0; i < fs.size(); ++i) results[start + i] = fs[i].get();
    }
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) results[i] = dispatch(parts[i], cfg);
  }
  Report r;
  r.spec = s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string section = parts[i].command;
    if (parts[i].kase) section += " " + *parts[i].kase;
    else if (parts[i].action && parts[i].command == "chartable") section += " " + *parts[i].action;
    r.merge(results[i], section);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"signature", "classify-h", "verify-curve", "chartable", "decompose",
                                              "maximality", "descent", "fermat-action", "census", "full"};
  return names;
}

RunSpec validate(RunSpec s) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), s.command) == names.end()) throw UsageError("unknown command " + s.command);
  if (s.action && *s.action != "i" && *s.action != "ii") throw UsageError("--action must be i or ii");
  for (auto* p : {&s.m, &s.q, &s.l})
    if (*p && **p < 1) throw UsageError("parameters must be positive");

  if (s.kase) {
    if (*s.kase != "1" && *s.kase != "2a" && *s.kase != "2b") throw UsageError("--case must be 1, 2a or 2b");
    if (*s.kase == "1") {
      if (s.l) throw UsageError("case 1 takes --q, not --l");
      if (!s.q && s.m) {
        if (*s.m % 2) throw UsageError("case 1 needs m = 2q");
        s.q = *s.m / 2;
      }
      if (!s.q) throw UsageError("case 1 needs --q or --m");
      if (*s.q < 3 || *s.q % 2 == 0) throw UsageError("case 1 needs q odd, q >= 3");
      if (s.m && *s.m != 2 * *s.q) throw UsageError("m must equal 2q");
      s.m = 2 * *s.q;
      if (s.action && *s.action != "i") throw UsageError("case 1 uses action i");
    } else {
      const int k = *s.kase == "2a" ? 3 : 4;
      if (s.q) throw UsageError("case " + *s.kase + " takes --l, not --q");
      if (!s.l && s.m) {
        if (*s.m % k) throw UsageError("case " + *s.kase + " needs " + str(k) + " | m");
        s.l = *s.m / k;
      }
      if (!s.l) throw UsageError("case " + *s.kase + " needs --l or --m");
      if (*s.l < 2) throw UsageError("case " + *s.kase + " needs l >= 2");
      if (s.m && *s.m != k * *s.l) throw UsageError("m must equal " + str(k) + "l");
      s.m = k * *s.l;
      const std::string act = *s.kase == "2a" ? "ii" : "i";
      if (s.action && *s.action != act) throw UsageError("case " + *s.kase + " uses action " + act);
    }
  }
  const bool needs_case = s.command == "verify-curve" || s.command == "decompose" || s.command == "maximality";
  if (needs_case && !s.kase) throw UsageError(s.command + " needs --case");
  if (s.command == "descent") {
    if (s.kase && *s.kase != "2a") throw UsageError("descent runs on case 2a");
    if (!s.l) s.l = 2;
    if (*s.l != 2) throw UsageError("descent is implemented for l = 2");
    s.kase = "2a";
    s.m = 6;
  }
  if (s.command == "maximality") {
    if (*s.kase == "2a") throw UsageError("maximality covers cases 1 and 2b");
    if (*s.kase == "2b" && *s.m != 8) throw UsageError("maximality for case 2b is set up for m = 8");
  }
  if (!needs_case && s.command != "descent") {
    if (!s.m) throw UsageError(s.command + " needs --m");
    if (*s.m < 3) throw UsageError("m must be at least 3");
  }
  if (s.m && *s.m > kMaxM && s.command != "classify-h")
    throw UsageError("m = " + str(*s.m) + " exceeds the supported bound " + str(kMaxM));
  if (s.command == "chartable" && s.action) {
    Action a = groups::parse_action(*s.action);
    if ((a == Action::I && *s.m % 2) || (a == Action::II && *s.m % 3))
      throw UsageError("action " + *s.action + " is not defined for m = " + str(*s.m));
  }
  return s;
}

Report dispatch(const RunSpec& raw, const Config& cfg) {
  RunSpec s = validate(raw);
  if (s.command == "signature") return cmd_signature(s);
  if (s.command == "classify-h") return cmd_classify_h(s);
  if (s.command == "verify-curve") return cmd_verify_curve(s, cfg);
  if (s.command == "chartable") return cmd_chartable(s);
  if (s.command == "decompose") return cmd_decompose(s);
  if (s.command == "maximality") return cmd_maximality(s);
  if (s.command == "descent") return cmd_descent(s);
  if (s.command == "fermat-action") return cmd_fermat(s);
  if (s.command == "census") return cmd_census(s);
  return cmd_full(s, cfg);
}

}  // namespace qplab::app
