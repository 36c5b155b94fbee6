#include "qplab/groups/finite_group.hpp"

#include <numeric>
#include <unordered_map>

#include "qplab/errors.hpp"

namespace qplab::groups {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names,
                         std::map<std::string, int> distinguished)
    : n_(order), table_(std::move(table)), names_(std::move(names)), distinguished_(std::move(distinguished)) {
  if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(ErrorCode::InvalidArgument, "Cayley table has the wrong size");
  std::vector<char> seen(n_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= n_ || seen[v]) throw Error(ErrorCode::InvalidArgument, "Cayley table is not a Latin square");
      seen[v] = 1;
    }
    if (mul(0, i) != i || mul(i, 0) != i) throw Error(ErrorCode::InvalidArgument, "index 0 is not the identity");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw Error(ErrorCode::InvalidArgument, "Cayley table is not associative");
    }
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw Error(ErrorCode::InvalidArgument, "names list has the wrong size");
  for (const auto& [k, v] : distinguished_)
    if (v < 0 || v >= n_) throw Error(ErrorCode::OutOfRange, "distinguished element out of range");
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens, const std::vector<std::string>& gen_names) {
  if (gens.empty()) return FiniteGroup(1, {0});
  const std::size_t deg = gens[0].size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::unordered_map<Perm, int, PermHash> index{{id, 0}};
  auto compose = [deg](const Perm& p, const Perm& q) {
    Perm r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Perm p = compose(elems[head], gens[g]);
      auto [it, fresh] = index.emplace(p, static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(std::move(p));
        if (elems.size() > 100000) throw Error(ErrorCode::OrderTooLarge, "permutation group too large");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  std::map<std::string, int> dist;
  for (std::size_t g = 0; g < gens.size() && g < gen_names.size(); ++g) dist[gen_names[g]] = index.at(gens[g]);
  return FiniteGroup(n, std::move(table), {}, std::move(dist));
}

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::string FiniteGroup::name(int a) const {
  if (!names_.empty()) return names_[a];
  if (a == 0) return "e";
  return "g" + std::to_string(a);
}

int FiniteGroup::gen(const std::string& name) const {
  auto it = distinguished_.find(name);
  if (it == distinguished_.end()) throw Error(ErrorCode::UnknownGeneratorName, "unknown generator '" + name + "'");
  return it->second;
}

void FiniteGroup::set_distinguished(const std::string& name, int index) {
  if (index < 0 || index >= n_) throw Error(ErrorCode::OutOfRange, "distinguished element out of range");
  distinguished_[name] = index;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) throw Error(ErrorCode::InvalidArgument, "names list has the wrong size");
  names_ = std::move(names);
}

int FiniteGroup::eval_word(const std::vector<std::string>& word) const {
  int r = 0;
  for (const auto& w : word) {
    const std::string suffix = "^-1";
    if (w.size() > suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0)
      r = mul(r, inv(gen(w.substr(0, w.size() - suffix.size()))));
    else
      r = mul(r, gen(w));
  }
  return r;
}

int FiniteGroup::parse(const std::string& expr) const {
  int r = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < expr.size() && (expr[pos] == ' ' || expr[pos] == '*')) ++pos;
  };
  skip();
  while (pos < expr.size()) {
    std::size_t start = pos;
    while (pos < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_')) ++pos;
    if (start == pos) throw Error(ErrorCode::ParseError, "cannot parse group word '" + expr + "'");
    std::string token = expr.substr(start, pos - start);
    int g = (token == "1" || token == "e") ? 0 : gen(token);
    long e = 1;
    if (pos < expr.size() && expr[pos] == '^') {
      ++pos;
      std::size_t used = 0;
      try {
        e = std::stol(expr.substr(pos), &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad exponent in '" + expr + "'");
      }
      pos += used;
    }
    r = mul(r, pow(g, e));
    skip();
  }
  return r;
}

Perm FiniteGroup::left_perm(int g) const {
  Perm p(n_);
  for (int x = 0; x < n_; ++x) p[x] = mul(g, x);
  return p;
}

}  // namespace qplab::groups
