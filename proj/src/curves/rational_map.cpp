#include "qplab/curves/rational_map.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "qplab/errors.hpp"

namespace qplab::curves {

RationalMap::RationalMap(const HyperPair& source, const HyperPair& target, FFE X, std::vector<FFE> coords)
    : source_(&source), target_(&target), X_(std::move(X)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != target.rank())
    throw Error(ErrorCode::InvalidArgument, "map needs one coordinate per target radical");
}

RationalMap RationalMap::identity(const HyperPair& c) {
  std::vector<FFE> coords;
  for (int i = 0; i < c.rank(); ++i) coords.push_back(FFE::radical(c, i));
  return RationalMap(c, c, FFE::x(c), coords);
}

FFE RationalMap::pullback(const FFE& e) const {
  if (!(e.curve() == *target_)) throw Error(ErrorCode::CurveMismatch, "pullback of an element off the target");
  FFE out(*source_);
  for (int mask = 0; mask < target_->basis_size(); ++mask) {
    const auto& r = e.coeff(mask);
    if (r.is_zero()) continue;
    FFE term = evaluate_at(r, X_);
    for (int i = 0; i < target_->rank(); ++i)
      if (mask >> i & 1) term *= coords_[i];
    out += term;
  }
  return out;
}

RationalMap RationalMap::compose(const RationalMap& inner) const {
  if (!(inner.target() == *source_)) throw Error(ErrorCode::CurveMismatch, "composition of incompatible maps");
  std::vector<FFE> coords;
  for (const auto& c : coords_) coords.push_back(inner.pullback(c));
  return RationalMap(inner.source(), *target_, inner.pullback(X_), coords);
}

RationalMap RationalMap::pow(int e) const {
  if (!(*source_ == *target_)) throw Error(ErrorCode::CurveMismatch, "power of a non-endomorphism");
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative map power; use map_inverse");
  RationalMap r = identity(*source_);
  for (int i = 0; i < e; ++i) r = compose(r);
  return r;
}

bool RationalMap::is_identity() const {
  if (!(*source_ == *target_)) return false;
  return *this == identity(*source_);
}

std::string RationalMap::to_string() const {
  std::ostringstream os;
  os << "(x -> " << X_.to_string();
  for (int i = 0; i < target_->rank(); ++i) os << ", " << target_->names()[i] << " -> " << coords_[i].to_string();
  os << ")";
  return os.str();
}

namespace {

void put(std::string& out, const UniPoly& p) {
  out += '[';
  for (const auto& c : p.coeffs()) {
    Cyclo m = c.minimize();
    out += std::to_string(m.order());
    for (const auto& r : m.coeffs()) {
      out += ',';
      out += r.get_str();
    }
    out += ';';
  }
  out += ']';
}

void put(std::string& out, const FFE& e) {
  for (const auto& r : e.coeffs()) {
    put(out, r.num());
    out += '/';
    put(out, r.den());
    out += '|';
  }
}

}  // namespace

std::string RationalMap::key() const {
  std::string out;
  put(out, X_);
  for (const auto& c : coords_) put(out, c);
  return out;
}

bool pullback_check(const RationalMap& map, const HyperPair& target) {
  if (!(map.target() == target)) return false;
  for (int i = 0; i < target.rank(); ++i) {
    FFE lhs = map.coords()[i] * map.coords()[i];
    FFE rhs = evaluate_at(RationalFunction(target.radicands()[i]), map.X());
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<int> map_order(const RationalMap& h, int max_order) {
  RationalMap p = h;
  for (int k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = h.compose(p);
  }
  return std::nullopt;
}

RationalMap map_inverse(const RationalMap& h, int max_order) {
  auto k = map_order(h, max_order);
  if (!k) throw Error(ErrorCode::OrderTooLarge, "map order exceeds " + std::to_string(max_order));
  return h.pow(*k - 1);
}

MapClosure map_closure(const std::vector<RationalMap>& gens, const std::vector<std::string>& names, int max_order) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "map_closure needs generators");
  const HyperPair& c = gens[0].source();
  MapClosure out;
  std::unordered_map<std::string, int> index;
  out.elements.push_back(RationalMap::identity(c));
  index.emplace(out.elements[0].key(), 0);
  out.left.assign(gens.size(), {});
  for (std::size_t h = 0; h < out.elements.size(); ++h) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      RationalMap k = gens[g].compose(out.elements[h]);
      auto key = k.key();
      auto it = index.find(key);
      int id;
      if (it == index.end()) {
        id = static_cast<int>(out.elements.size());
        if (id >= max_order) throw Error(ErrorCode::OrderTooLarge, "map closure exceeds " + std::to_string(max_order));
        index.emplace(key, id);
        out.elements.push_back(std::move(k));
      } else {
        id = it->second;
      }
      out.left[g].push_back(id);
    }
  }
  std::vector<std::vector<int>> perms = out.left;
  out.group = groups::FiniteGroup::from_permutations(perms, names);
  return out;
}

RelationReport verify_group_relations(const std::map<std::string, RationalMap>& maps, const fp::Presentation& p) {
  std::vector<const RationalMap*> gen;
  for (const auto& name : p.gen_names) {
    auto it = maps.find(name);
    if (it == maps.end()) throw Error(ErrorCode::UnknownGeneratorName, "no map named '" + name + "'");
    gen.push_back(&it->second);
  }
  std::map<int, RationalMap> inverses;
  RelationReport rep;
  rep.pass = true;
  for (const auto& w : p.relators) {
    const HyperPair& c = gen.empty() ? maps.begin()->second.source() : gen[0]->source();
    RationalMap acc = RationalMap::identity(c);
    // rightmost letter acts first
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      int letter = *it;
      int g = std::abs(letter) - 1;
      if (letter > 0) {
        acc = gen[g]->compose(acc);
      } else {
        auto inv = inverses.find(g);
        if (inv == inverses.end()) inv = inverses.emplace(g, map_inverse(*gen[g])).first;
        acc = inv->second.compose(acc);
      }
    }
    RelatorCheck rc;
    rc.relator = p.to_string(w);
    rc.pass = acc.is_identity();
    if (!rc.pass) {
      rc.witness = acc.to_string();
      rep.pass = false;
    }
    rep.relators.push_back(rc);
  }
  return rep;
}

BelyiReport verify_belyi(const std::map<std::string, RationalMap>& maps, const std::vector<std::string>& deck,
                         int beta_exponent) {
  BelyiReport rep;
  if (maps.empty()) return rep;
  const HyperPair& c = maps.begin()->second.source();
  FFE beta = FFE::x(c).pow(beta_exponent);
  for (const auto& [name, h] : maps) rep.invariant[name] = h.pullback(beta) == beta;
  UniPoly xm = UniPoly::monomial(Cyclo(1L), beta_exponent) - UniPoly(1L);
  rep.branch_values_ok = true;
  for (const auto& f : c.radicands()) rep.branch_values_ok &= xm.divmod(f).second.is_zero();
  rep.pass = rep.branch_values_ok;
  for (const auto& d : deck) {
    auto it = rep.invariant.find(d);
    if (it == rep.invariant.end()) throw Error(ErrorCode::UnknownGeneratorName, "no map named '" + d + "'");
    rep.pass &= it->second;
  }
  return rep;
}

namespace {

std::vector<Cyclo> roots_of_unity(int n) {
  std::vector<Cyclo> out;
  for (int k = 0; k < n; ++k) out.push_back(Cyclo::zeta(n, k));
  return out;
}

// c with c^2 = v among roots of unity of order dividing 2n, or rational square roots.
std::optional<Cyclo> sqrt_candidate(const Cyclo& v, int n) {
  for (const auto& r : roots_of_unity(2 * n))
    if (r * r == v) return r;
  if (v.is_rational() && v.rational_part() > 0) {
    const auto& q = v.rational_part();
    algebra::Integer a = q.get_num(), b = q.get_den();
    algebra::Integer sa = sqrt(a), sb = sqrt(b);
    if (sa * sa == a && sb * sb == b) return Cyclo(algebra::Rational(sa, sb));
  }
  return std::nullopt;
}

}  // namespace

bool verify_isomorphism(const RationalMap& forward, const RationalMap& backward) {
  return pullback_check(forward) && pullback_check(backward) && forward.compose(backward).is_identity() &&
         backward.compose(forward).is_identity();
}

std::optional<ModelIsomorphism> find_scaling_isomorphism(const HyperPair& c1, const HyperPair& c2, int max_order) {
  if (c1.rank() != c2.rank()) return std::nullopt;
  for (const auto& zeta : roots_of_unity(max_order)) {
    std::vector<Cyclo> scale;
    for (int i = 0; i < c1.rank(); ++i) {
      // f2(zeta x) = c f1(x) for a constant c
      UniPoly lhs = c2.radicands()[i].scale_var(zeta);
      const UniPoly& f1 = c1.radicands()[i];
      if (lhs.degree() != f1.degree()) break;
      Cyclo c = lhs.leading() / f1.leading();
      if (lhs != f1 * c) break;
      auto r = sqrt_candidate(c, max_order);
      if (!r) break;
      scale.push_back(*r);
    }
    if (static_cast<int>(scale.size()) != c1.rank()) continue;
    std::vector<FFE> fc, bc;
    for (int i = 0; i < c1.rank(); ++i) {
      fc.push_back(FFE::radical(c1, i).scaled(RationalFunction(scale[i])));
      bc.push_back(FFE::radical(c2, i).scaled(RationalFunction(scale[i].inverse())));
    }
    RationalMap fwd(c1, c2, FFE(c1, RationalFunction(UniPoly::monomial(zeta, 1))), fc);
    RationalMap bwd(c2, c1, FFE(c2, RationalFunction(UniPoly::monomial(zeta.inverse(), 1))), bc);
    if (verify_isomorphism(fwd, bwd)) return ModelIsomorphism{fwd, bwd};
  }
  return std::nullopt;
}

namespace {

struct FloatPoint {
  std::complex<double> x;
  std::vector<std::complex<double>> r;
};

FloatPoint random_point(const HyperPair& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  FloatPoint p;
  p.x = {d(rng), d(rng)};
  for (const auto& f : c.radicands()) p.r.push_back(std::sqrt(f.eval(p.x)));
  return p;
}

FloatPoint image(const RationalMap& m, const FloatPoint& p) {
  FloatPoint q;
  q.x = m.X().eval(p.x, p.r);
  for (const auto& c : m.coords()) q.r.push_back(c.eval(p.x, p.r));
  return q;
}

}  // namespace

double float_pullback_residual(const RationalMap& map, std::mt19937_64& rng, int points) {
  double worst = 0;
  for (int k = 0; k < points; ++k) {
    auto p = random_point(map.source(), rng);
    auto q = image(map, p);
    for (int i = 0; i < map.target().rank(); ++i) {
      auto lhs = q.r[i] * q.r[i];
      auto rhs = map.target().radicands()[i].eval(q.x);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  return worst;
}

double float_compose_residual(const RationalMap& outer, const RationalMap& inner, std::mt19937_64& rng, int points) {
  RationalMap comp = outer.compose(inner);
  double worst = 0;
  for (int k = 0; k < points; ++k) {
    auto p = random_point(inner.source(), rng);
    auto a = image(comp, p);
    auto b = image(outer, image(inner, p));
    worst = std::max(worst, std::abs(a.x - b.x) / std::max(1.0, std::abs(a.x)));
    for (std::size_t i = 0; i < a.r.size(); ++i)
      worst = std::max(worst, std::abs(a.r[i] - b.r[i]) / std::max(1.0, std::abs(a.r[i])));
  }
  return worst;
}

}  // namespace qplab::curves
