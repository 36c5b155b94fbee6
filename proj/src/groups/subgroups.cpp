#include "qplab/groups/subgroups.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "qplab/errors.hpp"

namespace qplab::groups {

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

namespace {

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int g : gens) {
      int p = G.mul(elems[head], g);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup from_elements(const FiniteGroup& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  Subgroup s{&G, std::move(elems), {}};
  // a small generating set, greedily
  std::vector<int> cur{0};
  for (int g : s.elements) {
    if (std::binary_search(cur.begin(), cur.end(), g)) continue;
    s.generators.push_back(g);
    cur = closure(G, s.generators);
    if (cur.size() == s.elements.size()) break;
  }
  return s;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= G.order()) throw Error(ErrorCode::OutOfRange, "generator index out of range");
  Subgroup s{&G, closure(G, gens), gens};
  if (G.order() % s.order() != 0) throw Error(ErrorCode::Internal, "Lagrange violated");
  return s;
}

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return from_elements(G, all);
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {0}, {}}; }

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> gens = H.generators.empty() ? H.elements : H.generators;
  for (int g = 0; g < G.order(); ++g)
    for (int h : gens)
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int h : H.elements)
      if (!H.contains(G.conj(g, h))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return from_elements(G, out);
}

Subgroup centralizer(const FiniteGroup& G, int x) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) out.push_back(g);
  return from_elements(G, out);
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int h : H.elements)
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return from_elements(G, out);
}

Subgroup center(const FiniteGroup& G) { return centralizer(G, whole_group(G)); }

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, int g) {
  std::vector<int> out;
  for (int h : H.elements) out.push_back(G.conj(g, h));
  std::vector<int> gens;
  for (int h : H.generators) gens.push_back(G.conj(g, h));
  std::sort(out.begin(), out.end());
  return Subgroup{&G, out, gens};
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::set<int> comms;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) comms.insert(G.commutator(a, b));
  return from_elements(G, closure(G, {comms.begin(), comms.end()}));
}

Subgroup intersection(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<int> out;
  std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(), B.elements.end(),
                        std::back_inserter(out));
  return from_elements(G, out);
}

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<int> gens = A.generators;
  gens.insert(gens.end(), B.generators.begin(), B.generators.end());
  if (A.generators.empty() && A.order() > 1) gens.insert(gens.end(), A.elements.begin(), A.elements.end());
  if (B.generators.empty() && B.order() > 1) gens.insert(gens.end(), B.elements.begin(), B.elements.end());
  return subgroup_generated(G, gens);
}

Subgroup normal_closure(const FiniteGroup& G, const Subgroup& H) {
  std::set<int> gens;
  for (int g = 0; g < G.order(); ++g)
    for (int h : H.generators.empty() ? H.elements : H.generators) gens.insert(G.conj(g, h));
  return from_elements(G, closure(G, {gens.begin(), gens.end()}));
}

Subgroup core(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> out;
  for (int h : H.elements) {
    bool ok = true;
    for (int g = 0; g < G.order() && ok; ++g)
      if (!H.contains(G.conj(g, h))) ok = false;
    if (ok) out.push_back(h);
  }
  return from_elements(G, out);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<int> seen(G.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < G.order(); ++g) cls.insert(G.conj(g, x));
    for (int y : cls) seen[y] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end(), [&G](const auto& a, const auto& b) {
    int oa = G.element_order(a[0]), ob = G.element_order(b[0]);
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  return classes;
}

std::vector<int> class_map(const FiniteGroup& G, const std::vector<std::vector<int>>& classes) {
  std::vector<int> m(G.order(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i]) m[x] = static_cast<int>(i);
  return m;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> seen(G.order(), 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::vector<int> c;
    for (int h : H.elements) c.push_back(G.mul(g, h));
    std::sort(c.begin(), c.end());
    for (int x : c) seen[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> left_coset_map(const FiniteGroup& G, const Subgroup& H) {
  auto cosets = left_cosets(G, H);
  std::vector<int> m(G.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) m[x] = static_cast<int>(i);
  return m;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  if (G.order() > 200) throw Error(ErrorCode::OrderTooLarge, "all_subgroups limited to order 200");
  using Mask = std::bitset<256>;
  auto to_mask = [](const std::vector<int>& e) {
    Mask m;
    for (int x : e) m.set(x);
    return m;
  };
  auto mask_less = [](const Mask& a, const Mask& b) {
    for (int i = 0; i < 256; ++i)
      if (a[i] != b[i]) return b[i];
    return false;
  };
  std::set<Mask, decltype(mask_less)> found(mask_less);
  // cyclic subgroups first
  std::vector<std::vector<int>> cyclic;
  std::set<Mask, decltype(mask_less)> cyc_seen(mask_less);
  for (int g = 0; g < G.order(); ++g) {
    auto e = closure(G, {g});
    if (cyc_seen.insert(to_mask(e)).second) cyclic.push_back({g});
  }
  std::vector<std::vector<int>> frontier;
  std::vector<std::vector<int>> gens_of;
  for (const auto& c : cyclic) {
    auto e = closure(G, c);
    if (found.insert(to_mask(e)).second) {
      frontier.push_back(c);
      gens_of.push_back(c);
    }
  }
  // Every subgroup is a join of cyclic ones; grow by one cyclic generator at a time.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& gens : frontier) {
      Mask cur = to_mask(closure(G, gens));
      for (const auto& c : cyclic) {
        if (cur[c[0]]) continue;
        std::vector<int> g2 = gens;
        g2.push_back(c[0]);
        auto e = closure(G, g2);
        if (found.insert(to_mask(e)).second) {
          next.push_back(g2);
          gens_of.push_back(g2);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& gens : gens_of) {
    Subgroup s{&G, closure(G, gens), gens};
    if (G.order() % s.order() != 0) throw Error(ErrorCode::Internal, "Lagrange violated");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& G, const std::vector<Subgroup>& subs) {
  std::vector<int> cls(subs.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    std::set<std::vector<int>> conj;
    for (int g = 0; g < G.order(); ++g) conj.insert(conjugate(G, subs[i], g).elements);
    std::vector<int> members;
    for (std::size_t j = i; j < subs.size(); ++j) {
      if (subs[j].order() != subs[i].order()) continue;
      if (conj.count(subs[j].elements)) {
        cls[j] = static_cast<int>(out.size());
        members.push_back(static_cast<int>(j));
      }
    }
    out.push_back(members);
  }
  return out;
}

bool is_abelian(const FiniteGroup& G) { return is_abelian(G, whole_group(G)); }

bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  const auto& gens = H.generators.empty() ? H.elements : H.generators;
  for (int a : gens)
    for (int b : gens)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& G, const Subgroup& H) {
  for (int h : H.elements)
    if (G.element_order(h) == H.order()) return true;
  return false;
}

}  // namespace qplab::groups
