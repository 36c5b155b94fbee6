#include "qplab/rep/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::rep {

namespace {

using i64 = long long;

i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 n = p - 1;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(ErrorCode::Internal, "no primitive root");
}

using Vec = std::vector<i64>;

// RREF of rows in place over GF(p); returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, i64 p) {
  std::vector<int> piv;
  const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    i64 inv = mod_inv(rows[r][c], p);
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      i64 f = rows[o][c];
      for (int k = 0; k < ncols; ++k) rows[o][k] = ((rows[o][k] - f * rows[r][k]) % p + p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

// Basis of {x : A x = 0} for a square matrix A (given as rows).
std::vector<Vec> nullspace(std::vector<Vec> A, i64 p) {
  const int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  auto piv = rref(A, p);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - A[i][f]) % p;
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

int CharacterTable::degree(int row) const {
  const Cyclo& v = values[row][0];
  return static_cast<int>(v.rational_part().get_num().get_si());
}

CharacterTable character_table(const groups::FiniteGroup& G) {
  const int n = G.order();
  if (n > 200) throw Error(ErrorCode::OrderTooLarge, "character_table limited to order 200");
  CharacterTable t;
  t.group = &G;
  t.classes = groups::conjugacy_classes(G);
  t.class_of = groups::class_map(G, t.classes);
  const int r = t.nclasses();
  t.inverse_class.resize(r);
  for (int k = 0; k < r; ++k) t.inverse_class[k] = t.class_of[G.inv(t.classes[k][0])];
  t.exponent = G.exponent();
  const int e = t.exponent;
  std::vector<i64> h(r);
  for (int k = 0; k < r; ++k) h[k] = static_cast<i64>(t.classes[k].size());

  i64 p = e + 1;
  while (!(is_prime(p) && p > 2 * n)) p += e;
  const i64 z = mod_pow(primitive_root(p), (p - 1) / e, p);  // primitive e-th root of unity

  // c[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
  std::vector<std::vector<std::vector<i64>>> c(r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
  for (int l = 0; l < r; ++l) {
    int zl = t.classes[l][0];
    for (int x = 0; x < n; ++x) ++c[t.class_of[x]][t.class_of[G.mul(G.inv(x), zl)]][l];
  }

  // Split GF(p)^r into common eigenspaces of all M_j, (M_j)_{kl} = c_jkl.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> id(r, Vec(r, 0));
    for (int k = 0; k < r; ++k) id[k][k] = 1;
    spaces.push_back(id);
  }
  for (int j = 0; j < r; ++j) {
    bool all_one = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_one) break;
    std::vector<std::vector<Vec>> next;
    for (auto& B : spaces) {
      if (B.size() == 1) {
        next.push_back(B);
        continue;
      }
      auto piv = rref(B, p);
      const int d = static_cast<int>(B.size());
      // A[i][k]: coordinates of M_j b_i in the RREF basis
      std::vector<Vec> A(d, Vec(d));
      for (int i = 0; i < d; ++i) {
        Vec img(r, 0);
        for (int k = 0; k < r; ++k) {
          i64 s = 0;
          for (int l = 0; l < r; ++l) s += c[j][k][l] * B[i][l] % p;
          img[k] = s % p;
        }
        for (int kk = 0; kk < d; ++kk) A[i][kk] = img[piv[kk]];
      }
      int covered = 0;
      for (i64 lam = 0; lam < p && covered < d; ++lam) {
        std::vector<Vec> At(d, Vec(d));
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) At[a][b] = (A[b][a] - (a == b ? lam : 0) + p) % p;
        auto ns = nullspace(At, p);
        if (ns.empty()) continue;
        covered += static_cast<int>(ns.size());
        std::vector<Vec> sub;
        for (const auto& x : ns) {
          Vec w(r, 0);
          for (int i = 0; i < d; ++i)
            for (int k = 0; k < r; ++k) w[k] = (w[k] + x[i] * B[i][k]) % p;
          sub.push_back(w);
        }
        next.push_back(sub);
      }
      if (covered != d) throw Error(ErrorCode::Internal, "class matrix not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) throw Error(ErrorCode::Internal, "character count mismatch");

  // power maps: class of g^s for representatives
  std::vector<int> rep_order(r);
  for (int k = 0; k < r; ++k) rep_order[k] = G.element_order(t.classes[k][0]);

  std::vector<Cyclo> zeta_pows(e);
  for (int k = 0; k < e; ++k) zeta_pows[k] = Cyclo::zeta(e, k);

  for (auto& S : spaces) {
    Vec w = S[0];
    i64 inv0 = mod_inv(w[0], p);
    for (auto& v : w) v = v * inv0 % p;  // omega_1 = 1
    i64 s = 0;
    for (int l = 0; l < r; ++l) s = (s + w[l] * w[t.inverse_class[l]] % p * mod_inv(h[l], p)) % p;
    i64 d2 = static_cast<i64>(n) % p * mod_inv(s, p) % p;
    i64 d = 0;
    for (i64 cand = 1; cand * cand <= n; ++cand)
      if (cand * cand % p == d2) d = cand;
    if (d == 0) throw Error(ErrorCode::Internal, "character degree not found");
    Vec chi(r);
    for (int l = 0; l < r; ++l) chi[l] = d * w[l] % p * mod_inv(h[l], p) % p;
    std::vector<Cyclo> row(r);
    for (int l = 0; l < r; ++l) {
      const int o = rep_order[l];
      const int g = t.classes[l][0];
      const int step = e / o;  // zeta_o = zeta_e^step
      std::vector<i64> pw(o);
      for (int s2 = 0; s2 < o; ++s2) pw[s2] = chi[t.class_of[G.pow(g, s2)]];
      Cyclo val = Cyclo::zero(e);
      i64 inv_o = mod_inv(o, p);
      for (int k = 0; k < o; ++k) {
        i64 acc = 0;
        for (int s2 = 0; s2 < o; ++s2) {
          long ex = static_cast<long>((static_cast<i64>(e) - (static_cast<i64>(k) * s2 % o) * step % e) % e);
          acc = (acc + pw[s2] * mod_pow(z, ex, p)) % p;
        }
        i64 nk = acc * inv_o % p;
        if (nk > d) throw Error(ErrorCode::Internal, "eigenvalue multiplicity out of range");
        if (nk) val += zeta_pows[(k * step) % e] * Cyclo(static_cast<long>(nk));
      }
      row[l] = val;
    }
    t.values.push_back(std::move(row));
  }

  // canonical order: degree ascending, then values lexicographically descending
  std::sort(t.values.begin(), t.values.end(), [](const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] != b[i]) return b[i] < a[i];
    return false;
  });
  return t;
}

Cyclo inner_product(const CharacterTable& t, int i, int j) {
  Cyclo s = Cyclo::zero(t.exponent);
  for (int k = 0; k < t.nclasses(); ++k)
    s += t.values[i][k] * t.values[j][k].conj() * Cyclo(static_cast<long>(t.classes[k].size()));
  return s / Cyclo(static_cast<long>(t.group->order()));
}

Cyclo frobenius_schur(const CharacterTable& t, int row) {
  const auto& G = *t.group;
  Cyclo s = Cyclo::zero(t.exponent);
  for (int g = 0; g < G.order(); ++g) s += t.value(row, G.mul(g, g));
  return s / Cyclo(static_cast<long>(G.order()));
}

int fixed_subspace_dim(const CharacterTable& t, int row, const groups::Subgroup& H) {
  Cyclo s = Cyclo::zero(t.exponent);
  for (int h : H.elements) s += t.value(row, h);
  s /= Cyclo(static_cast<long>(H.order()));
  if (!s.is_rational() || s.rational_part().get_den() != 1 || s.rational_part() < 0)
    throw Error(ErrorCode::NonIntegral, "fixed-subspace dimension is not a non-negative integer: " + s.to_string());
  return static_cast<int>(s.rational_part().get_num().get_si());
}

std::vector<RationalIrrepFamily> rational_irreps(const CharacterTable& t) {
  const int e = t.exponent;
  std::vector<int> fam(t.nchars(), -1);
  std::vector<RationalIrrepFamily> out;
  for (int i = 0; i < t.nchars(); ++i) {
    if (fam[i] >= 0) continue;
    RationalIrrepFamily f;
    for (int k = 1; k <= e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      std::vector<Cyclo> img;
      for (const auto& v : t.values[i]) img.push_back(v.galois(k));
      for (int j = 0; j < t.nchars(); ++j)
        if (t.values[j] == img && fam[j] < 0) {
          fam[j] = static_cast<int>(out.size());
          f.orbit.push_back(j);
        }
    }
    std::sort(f.orbit.begin(), f.orbit.end());
    f.field_degree = static_cast<int>(f.orbit.size());
    f.k = f.schur_index * f.field_degree;
    out.push_back(f);
  }
  return out;
}

std::string to_markdown(const CharacterTable& t) {
  std::ostringstream os;
  os << "| |";
  for (const auto& c : t.classes) os << " " << t.group->name(c[0]) << " |";
  os << "\n|---|";
  for (int k = 0; k < t.nclasses(); ++k) os << "---|";
  os << "\n";
  for (int i = 0; i < t.nchars(); ++i) {
    os << "| V" << (i + 1) << " |";
    for (const auto& v : t.values[i]) os << " " << v.minimize().to_string() << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace qplab::rep
