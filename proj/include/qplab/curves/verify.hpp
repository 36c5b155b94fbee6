#pragma once

#include <map>
#include <string>
#include <vector>

#include "qplab/curves/cases.hpp"

namespace qplab::curves {

struct CurveVerification {
  std::map<std::string, bool> pullback;          // each map and its inverse
  RelationReport deck;                           // a, b, t
  std::optional<RelationReport> aut;             // t, u
  std::optional<RelationReport> bt;              // case 1 presentation on b, t
  int deck_closure_order = 0;
  bool deck_isomorphic = false;                  // to build_semidirect(m, action)
  int full_closure_order = 0;                    // with u, 2a/2b only
  BelyiReport belyi;                             // deck a, b, t
  bool beta_not_invariant_under_u = false;
  double float_residual = 0;
  bool pass = false;
};

// Exact checks of the displayed model; float residuals as a secondary check.
CurveVerification verify_case(const CaseModel& model, unsigned seed = 1);

struct QuotientFactor {
  std::string label;  // S_a, S_b, S_ab, S_a1, S_a2
  UniPoly poly;       // w^2 = poly(v)
  int genus = 0;
  bool verified = false;  // quotient map checked (pullback and invariance)
};

// Quotient curves S/<a>, S/<b>, S/<ab> and the refinement of S_a by the
// involution induced from t^(m/2) (cases 1, 2b) or u (case 2a).
std::vector<QuotientFactor> derive_quotient_factors(Case kind, int param);

enum class IsoFamily { Scaling, CayleyMap };

// Scaling: x -> zeta x with radicals rescaled. CayleyMap: the substitution
// v = (x-1)/(x+1), w = z (2/(x+1))^l from S_a of case 2a onto its model;
// c1 must be w^2 = x^(2l) + x^l + 1 and c2 = case2a_sa_model(l).
std::optional<ModelIsomorphism> model_isomorphism_search(const HyperPair& c1, const HyperPair& c2, IsoFamily family,
                                                         int max_order = 24);

// w^2 = (1-v^2)^l + 2 sum_j C(2l,2j) v^(2j): the model of S_a in case 2a.
UniPoly case2a_sa_model(int l);
// (1-s)^l + 2 sum_j C(2l,2j) s^j
UniPoly case2a_sa1(int l);

}  // namespace qplab::curves
