#include "qplab/jacobian/kani_rosen.hpp"

#include <set>

#include "qplab/errors.hpp"

namespace qplab::jacobian {

using groups::Subgroup;

std::string to_string(DecompositionMethod m) { return m == DecompositionMethod::KaniRosen ? "kani_rosen" : "group_algebra"; }

std::string describe(const groups::FiniteGroup& G, const Subgroup& H) {
  if (H.order() == 1) return "<1>";
  std::string s = "<";
  for (std::size_t i = 0; i < H.generators.size(); ++i) s += (i ? ", " : "") + G.name(H.generators[i]);
  return s + ">";
}

namespace {

// H K as a set of elements
std::set<int> product_set(const groups::FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  std::set<int> out;
  for (int h : H.elements)
    for (int k : K.elements) out.insert(G.mul(h, k));
  return out;
}

}  // namespace

DecompositionReport kani_rosen_check(const covering::GeneratingVector& v, const std::vector<Subgroup>& subgroups,
                                     const std::vector<std::string>& labels) {
  const groups::FiniteGroup& G = *v.group;
  const int n = static_cast<int>(subgroups.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (product_set(G, subgroups[i], subgroups[j]) != product_set(G, subgroups[j], subgroups[i]))
        throw Error(ErrorCode::ConditionFailed, "(i) " + describe(G, subgroups[i]) + " and " +
                                                    describe(G, subgroups[j]) + " do not permute");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Subgroup hk = groups::join(G, subgroups[i], subgroups[j]);
      int g = covering::quotient_genus(v, hk).genus;
      if (g != 0)
        throw Error(ErrorCode::ConditionFailed, "(ii) g(S/" + describe(G, subgroups[i]) + describe(G, subgroups[j]) +
                                                    ") = " + std::to_string(g));
    }
  DecompositionReport rep;
  rep.method = DecompositionMethod::KaniRosen;
  rep.genus = v.surface_genus();
  for (int i = 0; i < n; ++i) {
    DecompositionFactor f;
    f.provenance = describe(G, subgroups[i]);
    f.label = i < static_cast<int>(labels.size()) ? labels[i] : "S/" + f.provenance;
    f.dimension = covering::quotient_genus(v, subgroups[i]).genus;
    rep.total += f.dimension;
    rep.factors.push_back(f);
  }
  if (rep.total != rep.genus)
    throw Error(ErrorCode::ConditionFailed,
                "(iii) genus sum " + std::to_string(rep.total) + " != " + std::to_string(rep.genus));
  return rep;
}

DecompositionReport refine_factor(const covering::GeneratingVector& v, const Subgroup& H, int d,
                                  std::optional<int> iota) {
  const groups::FiniteGroup& G = *v.group;
  Subgroup N = groups::normalizer(G, H);
  auto involution_mod_H = [&](int e) { return N.contains(e) && !H.contains(e) && H.contains(G.mul(e, e)); };
  if (!involution_mod_H(d))
    throw Error(ErrorCode::ConditionFailed, G.name(d) + " does not induce an involution of S/" + describe(G, H));
  auto with = [&](int e) {
    std::vector<int> gens = H.generators;
    gens.push_back(e);
    return groups::subgroup_generated(G, gens);
  };
  Subgroup Kd = with(d);
  auto commutes_mod_H = [&](int e) { return H.contains(G.mul(G.mul(e, d), G.inv(G.mul(d, e)))); };
  auto hyperelliptic = [&](int e) {
    return involution_mod_H(e) && !Kd.contains(e) && commutes_mod_H(e) && covering::quotient_genus(v, with(e)).genus == 0;
  };
  if (!iota) {
    for (int e : N.elements)
      if (hyperelliptic(e)) {
        iota = e;
        break;
      }
    if (!iota) throw Error(ErrorCode::ConditionFailed, "no hyperelliptic involution of S/" + describe(G, H) + " found");
  } else if (!hyperelliptic(*iota)) {
    throw Error(ErrorCode::ConditionFailed, G.name(*iota) + " does not induce a hyperelliptic involution "
                                                                    "commuting with " + G.name(d));
  }
  Subgroup Ke = with(G.mul(*iota, d));
  DecompositionReport rep;
  rep.method = DecompositionMethod::KaniRosen;
  rep.genus = covering::quotient_genus(v, H).genus;
  int gd = covering::quotient_genus(v, Kd).genus;
  int ge = covering::quotient_genus(v, Ke).genus;
  if (covering::quotient_genus(v, groups::join(G, Kd, Ke)).genus != 0)
    throw Error(ErrorCode::ConditionFailed, "(ii) the joined quotient has positive genus");
  if (gd + ge != rep.genus)
    throw Error(ErrorCode::ConditionFailed, "(iii) " + std::to_string(gd) + " + " + std::to_string(ge) +
                                                " != " + std::to_string(rep.genus));
  rep.factors.push_back({"S_H1", gd, 1, describe(G, Kd)});
  rep.factors.push_back({"S_H2", ge, 1, describe(G, Ke)});
  rep.total = gd + ge;
  return rep;
}

}  // namespace qplab::jacobian
