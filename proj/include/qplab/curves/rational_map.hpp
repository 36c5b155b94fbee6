#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qplab/curves/function_field.hpp"
#include "qplab/fp/presentation.hpp"
#include "qplab/groups/finite_group.hpp"

namespace qplab::curves {

// (x, y_i) -> (X, Y_i) from source to target, coordinates in the source function field.
class RationalMap {
 public:
  RationalMap(const HyperPair& source, const HyperPair& target, FFE X, std::vector<FFE> coords);
  static RationalMap identity(const HyperPair& c);

  const HyperPair& source() const { return *source_; }
  const HyperPair& target() const { return *target_; }
  const FFE& X() const { return X_; }
  const std::vector<FFE>& coords() const { return coords_; }

  // e(X, Y_i) for e on the target
  FFE pullback(const FFE& e) const;
  // (this o inner)(P) = this(inner(P)); inner must land on this map's source
  RationalMap compose(const RationalMap& inner) const;
  RationalMap pow(int e) const;  // e >= 0; endomorphisms only
  bool is_identity() const;

  std::string to_string() const;
  // canonical serialization (coefficients in their smallest cyclotomic field)
  std::string key() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.X_ == b.X_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

 private:
  const HyperPair* source_;
  const HyperPair* target_;
  FFE X_;
  std::vector<FFE> coords_;
};

// Y_i^2 = f_i(X) in the source function field.
bool pullback_check(const RationalMap& map, const HyperPair& target);
inline bool pullback_check(const RationalMap& map) { return pullback_check(map, map.target()); }

// Smallest k >= 1 with h^k = id; nullopt beyond max_order.
std::optional<int> map_order(const RationalMap& h, int max_order = 1000);
RationalMap map_inverse(const RationalMap& h, int max_order = 1000);

struct MapClosure {
  std::vector<RationalMap> elements;   // identity first, BFS order
  std::vector<std::vector<int>> left;  // left[g][h] = index of gen_g o element_h
  groups::FiniteGroup group;           // built from the left actions of the generators
};

// Group generated by endomorphisms of one curve; OrderTooLarge beyond max_order.
MapClosure map_closure(const std::vector<RationalMap>& gens, const std::vector<std::string>& names,
                       int max_order = 256);

struct RelatorCheck {
  std::string relator;
  bool pass = false;
  std::string witness;  // the composed map when it is not the identity
};

struct RelationReport {
  std::vector<RelatorCheck> relators;
  bool pass = false;
};

// Each relator word evaluated by composition, w = g_1 ... g_k -> g_1 o ... o g_k.
// UnknownGeneratorName when a presentation generator has no map.
RelationReport verify_group_relations(const std::map<std::string, RationalMap>& maps, const fp::Presentation& p);

struct BelyiReport {
  std::map<std::string, bool> invariant;  // beta o h == beta
  bool branch_values_ok = false;          // radicands divide x^m - 1
  bool pass = false;                      // deck maps invariant and branch values ok
};

BelyiReport verify_belyi(const std::map<std::string, RationalMap>& maps, const std::vector<std::string>& deck,
                         int beta_exponent);

// x -> zeta x, y_i -> r_i y_i for roots of unity zeta of order dividing max_order;
// both directions pullback-verified.
struct ModelIsomorphism {
  RationalMap forward;
  RationalMap backward;
};
std::optional<ModelIsomorphism> find_scaling_isomorphism(const HyperPair& c1, const HyperPair& c2, int max_order);
// Both maps pass pullback_check and compose to the identity either way.
bool verify_isomorphism(const RationalMap& forward, const RationalMap& backward);

// Float defense: evaluate at random points of the source and test the target equations.
double float_pullback_residual(const RationalMap& map, std::mt19937_64& rng, int points = 3);
// |composite(P) - outer(inner(P))| at random points.
double float_compose_residual(const RationalMap& outer, const RationalMap& inner, std::mt19937_64& rng,
                              int points = 3);

}  // namespace qplab::curves
