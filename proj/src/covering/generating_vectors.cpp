#include "qplab/covering/generating_vectors.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <thread>

#include "qplab/errors.hpp"

namespace qplab::covering {

using groups::FiniteGroup;
using groups::Subgroup;

void GeneratingVector::validate() const {
  const auto& G = *group;
  if (signature.genus != 0) throw Error(ErrorCode::VerificationFailed, "generating vector needs a genus-0 signature");
  if (entries.size() != signature.periods.size())
    throw Error(ErrorCode::VerificationFailed, "entry count differs from the number of periods");
  int prod = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (G.element_order(entries[i]) != signature.periods[i])
      throw Error(ErrorCode::VerificationFailed,
                  "entry " + std::to_string(i + 1) + " (" + G.name(entries[i]) + ") has order " +
                      std::to_string(G.element_order(entries[i])) + ", expected " +
                      std::to_string(signature.periods[i]));
    prod = G.mul(prod, entries[i]);
  }
  if (prod != 0) throw Error(ErrorCode::VerificationFailed, "product of entries is " + G.name(prod));
  if (groups::subgroup_generated(G, entries).order() != G.order())
    throw Error(ErrorCode::VerificationFailed, "entries do not generate the group");
}

std::vector<std::vector<int>> coset_cycle_lengths(const GeneratingVector& v, const Subgroup& H) {
  const auto& G = *v.group;
  auto cosets = groups::left_cosets(G, H);
  auto cmap = groups::left_coset_map(G, H);
  std::vector<std::vector<int>> out;
  for (int g : v.entries) {
    std::vector<char> seen(cosets.size(), 0);
    std::vector<int> lens;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (seen[c]) continue;
      int len = 0;
      int cur = static_cast<int>(c);
      while (!seen[cur]) {
        seen[cur] = 1;
        ++len;
        cur = cmap[G.mul(g, cosets[cur][0])];
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    out.push_back(lens);
  }
  return out;
}

QuotientGenus quotient_genus(const GeneratingVector& v, const Subgroup& H) {
  const long N = v.group->order() / H.order();
  long two_g_minus_2 = N * (2L * v.signature.genus - 2);
  std::vector<int> periods;
  auto cycles = coset_cycle_lengths(v, H);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (int len : cycles[i]) {
      two_g_minus_2 += len - 1;
      int p = v.signature.periods[i] / len;
      if (p > 1) periods.push_back(p);
    }
  }
  if (two_g_minus_2 % 2 != 0) throw Error(ErrorCode::NonIntegralGenus, "odd Riemann-Hurwitz total for S/H");
  int g = static_cast<int>(two_g_minus_2 / 2 + 1);
  return {g, Signature(g, periods)};
}

int fixed_point_count(const GeneratingVector& v, int h) {
  const auto& G = *v.group;
  if (h == 0) throw Error(ErrorCode::IdentityElement, "fixed_point_count of the identity");
  int total = 0;
  for (int g : v.entries) {
    auto C = groups::subgroup_generated(G, {g});
    for (const auto& coset : groups::left_cosets(G, C)) {
      int x = coset[0];
      if (C.contains(G.mul(G.inv(x), G.mul(h, x)))) ++total;
    }
  }
  return total;
}

namespace {

struct Enumerator {
  const FiniteGroup& G;
  const std::vector<int>& periods;
  std::vector<std::vector<int>> by_order;  // candidates per position

  Enumerator(const FiniteGroup& g, const std::vector<int>& p) : G(g), periods(p) {
    for (int n : periods) {
      std::vector<int> c;
      for (int x = 0; x < G.order(); ++x)
        if (G.element_order(x) == n) c.push_back(x);
      by_order.push_back(c);
    }
  }

  // Visits every vector whose first entry is `first`; stops early when visit returns false.
  template <class F>
  bool run(int first, F&& visit) {
    const int r = static_cast<int>(periods.size());
    std::vector<int> cur{first};
    std::function<bool(int, int)> rec = [&](int pos, int prod) -> bool {
      if (pos == r - 1) {
        int last = G.inv(prod);
        if (G.element_order(last) != periods[pos]) return true;
        cur.push_back(last);
        bool go = true;
        if (groups::subgroup_generated(G, cur).order() == G.order()) go = visit(cur);
        cur.pop_back();
        return go;
      }
      for (int x : by_order[pos]) {
        cur.push_back(x);
        bool go = rec(pos + 1, G.mul(prod, x));
        cur.pop_back();
        if (!go) return false;
      }
      return true;
    };
    if (r == 1) {
      if (first == 0 && G.order() == 1) return visit(cur);
      return true;
    }
    return rec(1, first);
  }
};

void check_input(const FiniteGroup& G, const Signature& sig) {
  if (sig.genus != 0) throw Error(ErrorCode::InvalidArgument, "generating vectors need a genus-0 signature");
  if (G.order() > 200) throw Error(ErrorCode::OrderTooLarge, "generating-vector enumeration limited to order 200");
  if (sig.periods.size() > 4) throw Error(ErrorCode::OutOfRange, "at most 4 branch points supported");
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

VectorCensus enumerate_generating_vectors(const FiniteGroup& G, const Signature& sig) {
  check_input(G, sig);
  return enumerate_generating_vectors(G, sig, groups::automorphism_group(G));
}

VectorCensus enumerate_generating_vectors(const FiniteGroup& G, const Signature& sig,
                                          const std::vector<groups::GroupHom>& automorphisms) {
  check_input(G, sig);
  VectorCensus census;
  const int r = static_cast<int>(sig.periods.size());
  if (r == 0) {
    if (G.order() == 1) census.vectors.push_back({&G, {}, sig});
  } else {
    Enumerator en(G, sig.periods);
    const auto& firsts = en.by_order[0];
    // partition the first entry across workers; results are concatenated in order
    const int workers = std::max(1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()),
                                                  static_cast<int>(firsts.size())));
    std::vector<std::future<std::vector<std::vector<int>>>> jobs;
    const std::size_t chunk = (firsts.size() + workers - 1) / std::max(workers, 1);
    for (std::size_t lo = 0; lo < firsts.size(); lo += chunk) {
      std::size_t hi = std::min(firsts.size(), lo + chunk);
      jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
        Enumerator local(G, sig.periods);
        std::vector<std::vector<int>> found;
        for (std::size_t i = lo; i < hi; ++i)
          local.run(firsts[i], [&](const std::vector<int>& v) {
            found.push_back(v);
            return true;
          });
        return found;
      }));
    }
    for (auto& j : jobs)
      for (auto& v : j.get()) census.vectors.push_back({&G, v, sig});
  }

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < census.vectors.size(); ++i) index[census.vectors[i].entries] = static_cast<int>(i);
  std::map<std::vector<int>, int> orbit_of_key;
  for (const auto& v : census.vectors) {
    std::vector<int> best = v.entries;
    for (const auto& phi : automorphisms) {
      std::vector<int> img(v.entries.size());
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = phi.images[v.entries[k]];
      best = std::min(best, img);
    }
    auto [it, inserted] = orbit_of_key.emplace(best, static_cast<int>(orbit_of_key.size()));
    census.aut_orbit.push_back(it->second);
  }
  census.aut_orbits = static_cast<int>(orbit_of_key.size());

  std::vector<int> parent(census.aut_orbits);
  std::iota(parent.begin(), parent.end(), 0);
  int components = census.aut_orbits;
  for (std::size_t i = 0; i < census.vectors.size(); ++i) {
    const auto& e = census.vectors[i].entries;
    for (int k = 0; k + 1 < r; ++k) {
      if (sig.periods[k] != sig.periods[k + 1]) continue;
      auto w = e;
      w[k] = G.conj(e[k], e[k + 1]);
      w[k + 1] = e[k];
      auto it = index.find(w);
      if (it == index.end()) throw Error(ErrorCode::Internal, "braid move left the vector set");
      int a = find(parent, census.aut_orbit[i]), b = find(parent, census.aut_orbit[it->second]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
  }
  census.braid_orbits = components;
  return census;
}

bool has_generating_vector(const FiniteGroup& G, const Signature& sig) {
  check_input(G, sig);
  if (sig.periods.empty()) return G.order() == 1;
  Enumerator en(G, sig.periods);
  bool found = false;
  for (int first : en.by_order[0]) {
    en.run(first, [&](const std::vector<int>&) {
      found = true;
      return false;
    });
    if (found) break;
  }
  return found;
}

}  // namespace qplab::covering
