#include "qplab/groups/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "qplab/errors.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::groups {

Action parse_action(const std::string& s) {
  if (s == "i" || s == "I" || s == "1") return Action::I;
  if (s == "ii" || s == "II" || s == "2") return Action::II;
  throw Error(ErrorCode::ParseError, "action must be 'i' or 'ii', got '" + s + "'");
}

std::string to_string(Action a) { return a == Action::I ? "i" : "ii"; }

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t), {}, n > 1 ? std::map<std::string, int>{{"g", 1}} : std::map<std::string, int>{});
}

FiniteGroup klein_four() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return FiniteGroup(4, std::move(t), {"e", "a", "b", "ab"}, {{"a", 1}, {"b", 2}});
}

FiniteGroup dihedral(int n) {
  // r^k s^e -> index k + n e
  if (n < 1) throw Error(ErrorCode::OutOfRange, "dihedral group needs n >= 1");
  const int N = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      int k1 = x % n, e1 = x / n, k2 = y % n, e2 = y / n;
      int k = ((e1 ? k1 - k2 : k1 + k2) % n + n) % n;
      t[static_cast<std::size_t>(x) * N + y] = k + n * (e1 ^ e2);
    }
  return FiniteGroup(N, std::move(t), {}, {{"r", n > 1 ? 1 : 0}, {"s", n}});
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::OrderTooLarge, "symmetric groups limited to n <= 5");
  if (n == 1) return cyclic(1);
  Perm tr(n), cyc(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({tr, cyc}, {"s1", "c"});
}

FiniteGroup alternating(int n) {
  if (n < 3 || n > 5) throw Error(ErrorCode::OrderTooLarge, "alternating groups limited to 3 <= n <= 5");
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  // (a, b) -> a * |B| + b
  const int na = A.order(), nb = B.order(), N = na * nb;
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      t[static_cast<std::size_t>(x) * N + y] = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
  std::map<std::string, int> dist;
  for (const auto& [k, v] : A.distinguished()) dist[k + "_1"] = v * nb;
  for (const auto& [k, v] : B.distinguished()) dist[k + "_2"] = v;
  return FiniteGroup(N, std::move(t), {}, std::move(dist));
}

FiniteGroup build_semidirect(int m, Action action) {
  if (m < 3) throw Error(ErrorCode::OutOfRange, "build_semidirect needs m >= 3");
  if (action == Action::I && m % 2 != 0)
    throw Error(ErrorCode::IncompatibleAction, "action i requires m even (m=" + std::to_string(m) + ")");
  if (action == Action::II && m % 3 != 0)
    throw Error(ErrorCode::IncompatibleAction, "action ii requires 3 | m (m=" + std::to_string(m) + ")");
  // Vectors v in Z2^2 as bitmasks: bit0 = a, bit1 = b.
  auto A = [action](int v) {
    int ia = v & 1, ib = (v >> 1) & 1;
    if (action == Action::I) {  // a -> a, b -> ab
      return (ia ^ ib) | (ib << 1);
    }
    // a -> b, b -> ab
    return ib | ((ia ^ ib) << 1);
  };
  const int period = action == Action::I ? 2 : 3;
  std::vector<std::vector<int>> Apow(period, std::vector<int>(4));
  for (int v = 0; v < 4; ++v) {
    Apow[0][v] = v;
    for (int k = 1; k < period; ++k) Apow[k][v] = A(Apow[k - 1][v]);
  }
  const int N = 4 * m;
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  std::vector<std::string> names(N);
  for (int x = 0; x < N; ++x) {
    int v = x % 4, k = x / 4;
    std::string s;
    if (v & 1) s += "a";
    if (v & 2) s += "b";
    if (k == 1) s += "t";
    if (k > 1) s += "t^" + std::to_string(k);
    names[x] = s.empty() ? "e" : s;
    for (int y = 0; y < N; ++y) {
      int w = y % 4, l = y / 4;
      t[static_cast<std::size_t>(x) * N + y] = 4 * ((k + l) % m) + (v ^ Apow[k % period][w]);
    }
  }
  return FiniteGroup(N, std::move(t), std::move(names), {{"a", 1}, {"b", 2}, {"t", 4}});
}

}  // namespace qplab::groups
