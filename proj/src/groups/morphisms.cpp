#include "qplab/groups/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "qplab/errors.hpp"

namespace qplab::groups {

bool GroupHom::is_injective() const { return kernel().order() == 1; }

bool GroupHom::is_surjective() const { return image().order() == codomain->order(); }

Subgroup GroupHom::kernel() const {
  std::vector<int> k;
  for (int g = 0; g < domain->order(); ++g)
    if (images[g] == 0) k.push_back(g);
  return subgroup_generated(*domain, k);
}

Subgroup GroupHom::image() const { return subgroup_generated(*codomain, images); }

GroupHom make_hom(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<int> images) {
  if (static_cast<int>(images.size()) != dom.order()) throw Error(ErrorCode::InvalidArgument, "hom image list has the wrong size");
  for (int a = 0; a < dom.order(); ++a)
    for (int b = 0; b < dom.order(); ++b)
      if (images[dom.mul(a, b)] != cod.mul(images[a], images[b]))
        throw Error(ErrorCode::InvalidArgument, "map does not respect multiplication");
  return GroupHom{&dom, &cod, std::move(images)};
}

std::optional<GroupHom> extend_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& gens,
                                   const std::vector<int>& imgs) {
  std::vector<int> img(dom.order(), -1);
  img[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = dom.mul(x, gens[i]);
      int iy = cod.mul(img[x], imgs[i]);
      if (img[y] < 0) {
        img[y] = iy;
        queue.push_back(y);
      } else if (img[y] != iy) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != dom.order()) throw Error(ErrorCode::InvalidArgument, "generators do not generate the domain");
  // Consistency along the spanning tree plus every edge of the Cayley
  // graph (checked above) makes this a homomorphism.
  return GroupHom{&dom, &cod, std::move(img)};
}

std::vector<int> small_generating_set(const FiniteGroup& G) {
  std::vector<int> order_sorted(G.order());
  for (int i = 0; i < G.order(); ++i) order_sorted[i] = i;
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&G](int a, int b) { return G.element_order(a) > G.element_order(b); });
  // Try pairs first: most groups here are 2-generated.
  if (G.order() == 1) return {};
  for (int a : order_sorted) {
    if (subgroup_generated(G, {a}).order() == G.order()) return {a};
  }
  for (std::size_t i = 0; i < order_sorted.size(); ++i) {
    int a = order_sorted[i];
    if (G.element_order(a) < G.element_order(order_sorted[0])) break;
    for (int b : order_sorted)
      if (subgroup_generated(G, {a, b}).order() == G.order()) return {a, b};
  }
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(G);
  for (int g : order_sorted) {
    if (cur.contains(g)) continue;
    gens.push_back(g);
    cur = subgroup_generated(G, gens);
    if (cur.order() == G.order()) break;
  }
  return gens;
}

namespace {

// Backtracking over images of gens with matching element orders; visit
// returns false to stop the search.
void search_homs(const FiniteGroup& A, const FiniteGroup& B, bool bijective,
                 const std::function<bool(GroupHom&&)>& visit) {
  auto gens = small_generating_set(A);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < B.order(); ++y)
      if (B.element_order(y) == A.element_order(gens[i])) candidates[i].push_back(y);
  std::vector<int> imgs(gens.size());
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == gens.size()) {
      auto h = extend_hom(A, B, gens, imgs);
      if (!h) return;
      if (bijective) {
        std::vector<char> hit(B.order(), 0);
        for (int v : h->images) {
          if (hit[v]) return;
          hit[v] = 1;
        }
      }
      if (!visit(std::move(*h))) stop = true;
      return;
    }
    for (int y : candidates[i]) {
      imgs[i] = y;
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::pair<int, int>> class_profile(const FiniteGroup& G) {
  std::vector<std::pair<int, int>> p;
  for (const auto& c : conjugacy_classes(G)) p.emplace_back(G.element_order(c[0]), static_cast<int>(c.size()));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<GroupHom> automorphism_group(const FiniteGroup& G) {
  if (G.order() > 200) throw Error(ErrorCode::OrderTooLarge, "automorphism_group limited to order 200");
  std::vector<GroupHom> out;
  search_homs(G, G, true, [&out](GroupHom&& h) {
    out.push_back(std::move(h));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return out;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.order() > 200) throw Error(ErrorCode::OrderTooLarge, "is_isomorphic limited to order 200");
  if (class_profile(A) != class_profile(B)) return std::nullopt;
  std::optional<GroupHom> found;
  search_homs(A, B, true, [&found](GroupHom&& h) {
    found = std::move(h);
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) { return find_isomorphism(A, B).has_value(); }

Quotient quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  auto cosets = left_cosets(G, N);
  auto proj = left_coset_map(G, N);
  const int k = static_cast<int>(cosets.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = proj[G.mul(cosets[i][0], cosets[j][0])];
  std::map<std::string, int> dist;
  for (const auto& [name, idx] : G.distinguished()) dist[name] = proj[idx];
  return Quotient{FiniteGroup(k, std::move(table), {}, std::move(dist)), std::move(proj)};
}

}  // namespace qplab::groups
