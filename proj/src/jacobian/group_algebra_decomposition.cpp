#include "qplab/jacobian/group_algebra_decomposition.hpp"

#include "qplab/errors.hpp"

namespace qplab::jacobian {

using groups::Subgroup;

std::vector<FamilyDimension> rojas_dimensions(const covering::GeneratingVector& v, const rep::CharacterTable& t) {
  const groups::FiniteGroup& G = *v.group;
  const int gamma = v.signature.genus;
  std::vector<Subgroup> stabilizers;
  for (int g : v.entries) stabilizers.push_back(groups::subgroup_generated(G, {g}));
  std::vector<FamilyDimension> out;
  auto families = rep::rational_irreps(t);
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& fam = families[i];
    FamilyDimension fd;
    fd.family = static_cast<int>(i);
    fd.orbit = fam.orbit;
    fd.degree = t.degree(fam.orbit.front());
    fd.k = fam.k;
    fd.multiplicity = fd.degree / fam.schur_index;
    bool trivial = fd.degree == 1 && fam.orbit.front() == 0;
    if (trivial) {
      fd.dimension = gamma;
    } else {
      int twice = 0;
      for (const auto& S : stabilizers) twice += fd.degree - rep::fixed_subspace_dim(t, fam.orbit.front(), S);
      int doubled = fd.k * (2 * fd.degree * (gamma - 1) + twice);
      if (doubled % 2 != 0)
        throw Error(ErrorCode::NonIntegralDimension,
                    "family " + std::to_string(i) + ": 2 dim B = " + std::to_string(doubled) + " (Schur index assumption?)");
      fd.dimension = doubled / 2;
      if (fd.dimension < 0)
        throw Error(ErrorCode::NonIntegralDimension, "family " + std::to_string(i) + ": negative dimension");
    }
    out.push_back(fd);
  }
  return out;
}

DecompositionReport group_algebra_decomposition(const covering::GeneratingVector& v, const rep::CharacterTable& t) {
  DecompositionReport rep;
  rep.method = DecompositionMethod::GroupAlgebra;
  rep.genus = v.surface_genus();
  for (const auto& fd : rojas_dimensions(v, t)) {
    std::string rows;
    for (int r : fd.orbit) rows += (rows.empty() ? "" : "+") + std::string("V") + std::to_string(r + 1);
    rep.factors.push_back({"B" + std::to_string(fd.family + 1), fd.dimension, fd.multiplicity, rows});
    rep.total += fd.dimension * fd.multiplicity;
  }
  return rep;
}

std::vector<Subgroup> jimenez_subgroup_search(const covering::GeneratingVector& v, const rep::CharacterTable& t,
                                              int family) {
  auto dims = rojas_dimensions(v, t);
  if (family < 0 || family >= static_cast<int>(dims.size()))
    throw Error(ErrorCode::OutOfRange, "family " + std::to_string(family));
  if (dims[family].dimension == 0)
    throw Error(ErrorCode::InvalidArgument, "family " + std::to_string(family) + " has dim B = 0");
  auto families = rep::rational_irreps(t);
  std::vector<Subgroup> out;
  for (const auto& H : groups::all_subgroups(*v.group)) {
    bool ok = true;
    for (std::size_t l = 0; l < dims.size() && ok; ++l) {
      if (dims[l].dimension == 0) continue;
      int fixed = rep::fixed_subspace_dim(t, dims[l].orbit.front(), H);
      int want = static_cast<int>(l) == family ? families[l].schur_index : 0;
      ok = fixed == want;
    }
    if (ok) out.push_back(H);
  }
  return out;
}

int carocca_rodriguez_genus(const covering::GeneratingVector& v, const rep::CharacterTable& t, const Subgroup& H) {
  auto families = rep::rational_irreps(t);
  int genus = 0;
  for (const auto& fd : rojas_dimensions(v, t)) {
    if (fd.dimension == 0) continue;
    int fixed = rep::fixed_subspace_dim(t, fd.orbit.front(), H);
    int m = families[fd.family].schur_index;
    if (fixed % m != 0)
      throw Error(ErrorCode::NonIntegralMultiplicity, "dim V^H = " + std::to_string(fixed) + " not divisible by " +
                                                          std::to_string(m));
    genus += fd.dimension * (fixed / m);
  }
  return genus;
}

}  // namespace qplab::jacobian
