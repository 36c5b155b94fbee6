#include "qplab/curves/fermat.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "qplab/covering/branch_data.hpp"
#include "qplab/errors.hpp"

namespace qplab::curves {

using Elem = RadicalAlgebra::Elem;

RadicalAlgebra::RadicalAlgebra(std::vector<Cyclo> squares) : squares_(std::move(squares)) {}

Elem RadicalAlgebra::scalar(const Cyclo& c) const {
  Elem e(dim(), Cyclo(0L));
  e[0] = c;
  return e;
}

Elem RadicalAlgebra::radical(int j) const {
  if (j < 1 || j > nradicals()) throw Error(ErrorCode::OutOfRange, "radical index " + std::to_string(j));
  Elem e(dim(), Cyclo(0L));
  e[std::size_t{1} << (j - 1)] = Cyclo(1L);
  return e;
}

Elem RadicalAlgebra::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (std::size_t i = 0; i < dim(); ++i) r[i] += y[i];
  return r;
}

Elem RadicalAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem r(dim(), Cyclo(0L));
  for (std::size_t s = 0; s < dim(); ++s) {
    if (x[s].is_zero()) continue;
    for (std::size_t t = 0; t < dim(); ++t) {
      if (y[t].is_zero()) continue;
      Cyclo c = x[s] * y[t];
      std::size_t both = s & t;
      for (int j = 0; both; ++j, both >>= 1)
        if (both & 1) c *= squares_[j];
      r[s ^ t] += c;
    }
  }
  return r;
}

Elem RadicalAlgebra::scaled(const Elem& x, const Cyclo& c) const {
  Elem r = x;
  for (auto& v : r) v *= c;
  return r;
}

bool RadicalAlgebra::equal(const Elem& x, const Elem& y) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

bool RadicalAlgebra::is_scalar(const Elem& x) const {
  for (std::size_t i = 1; i < dim(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

std::string RadicalAlgebra::to_string(const Elem& x) const {
  std::string out;
  for (std::size_t s = 0; s < dim(); ++s) {
    if (x[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int j = 0; j < nradicals(); ++j)
      if (s >> j & 1) mono += (mono.empty() ? "" : "*") + std::string("s") + std::to_string(j + 1);
    std::string c = x[s].minimize().to_string();
    if (mono.empty())
      out += c;
    else if (x[s].is_one())
      out += mono;
    else
      out += "(" + c + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> RadicalAlgebra::to_complex(const Elem& x) const {
  std::vector<std::complex<double>> roots;
  for (const auto& l : squares_) roots.push_back(std::sqrt(l.to_complex()));
  std::complex<double> total = 0;
  for (std::size_t s = 0; s < dim(); ++s) {
    if (x[s].is_zero()) continue;
    std::complex<double> v = x[s].to_complex();
    for (int j = 0; j < nradicals(); ++j)
      if (s >> j & 1) v *= roots[j];
    total += v;
  }
  return total;
}

MonomialMap monomial_compose(const RadicalAlgebra& R, const MonomialMap& outer, const MonomialMap& inner) {
  MonomialMap r;
  for (std::size_t i = 0; i < outer.src.size(); ++i) {
    int k = outer.src[i];
    r.src.push_back(inner.src[k]);
    r.coeff.push_back(R.mul(outer.coeff[i], inner.coeff[k]));
  }
  return r;
}

bool monomial_projective_equal(const RadicalAlgebra& R, const MonomialMap& x, const MonomialMap& y) {
  if (x.src != y.src) return false;
  for (std::size_t i = 1; i < x.src.size(); ++i)
    if (!R.equal(R.mul(x.coeff[i], y.coeff[0]), R.mul(y.coeff[i], x.coeff[0]))) return false;
  return true;
}

bool monomial_in_sign_group(const RadicalAlgebra& R, const MonomialMap& x) {
  for (std::size_t i = 0; i < x.src.size(); ++i)
    if (x.src[i] != static_cast<int>(i)) return false;
  Elem first = R.mul(x.coeff[0], x.coeff[0]);
  for (std::size_t i = 1; i < x.src.size(); ++i)
    if (!R.equal(R.mul(x.coeff[i], x.coeff[i]), first)) return false;
  return true;
}

namespace {

// X_q / X_1 on the curve as c0 + c1 z with z = pi = -X_2/X_1
struct Linear {
  Cyclo c0, c1;
};

std::vector<Linear> square_ratios(const std::vector<Cyclo>& lambda0) {
  const int m = static_cast<int>(lambda0.size()) + 2;
  std::vector<Linear> r(m, Linear{Cyclo(0L), Cyclo(0L)});
  r[0] = {Cyclo(1L), Cyclo(0L)};
  r[1] = {Cyclo(0L), Cyclo(-1L)};
  for (int k = 0; k + 2 < m; ++k) r[k + 2] = {-lambda0[k], Cyclo(1L)};
  return r;
}

// Weights of quadric k (0-based positions): lambda_k x_1^2 + x_2^2 + x_{k+3}^2
std::vector<std::pair<int, Cyclo>> quadric(const std::vector<Cyclo>& lambda0, int k) {
  return {{0, lambda0[k]}, {1, Cyclo(1L)}, {k + 2, Cyclo(1L)}};
}

bool preserves_curve(const RadicalAlgebra& R, const MonomialMap& L, const std::vector<Cyclo>& lambda0,
                     const std::vector<Linear>& ratio) {
  for (std::size_t k = 0; k < lambda0.size(); ++k) {
    Cyclo c0(0L), c1(0L);
    for (const auto& [p, w] : quadric(lambda0, static_cast<int>(k))) {
      Elem sq = R.mul(L.coeff[p], L.coeff[p]);
      if (!R.is_scalar(sq)) return false;
      c0 += w * sq[0] * ratio[L.src[p]].c0;
      c1 += w * sq[0] * ratio[L.src[p]].c1;
    }
    if (!c0.is_zero() || !c1.is_zero()) return false;
  }
  return true;
}

// z -> pi(L x) as a Mobius transformation of z = pi(x)
std::optional<algebra::MobiusTransformation> induced(const RadicalAlgebra& R, const MonomialMap& L,
                                                     const std::vector<Linear>& ratio) {
  Elem s1 = R.mul(L.coeff[0], L.coeff[0]);
  Elem s2 = R.mul(L.coeff[1], L.coeff[1]);
  if (!R.is_scalar(s1) || !R.is_scalar(s2)) return std::nullopt;
  const Linear& num = ratio[L.src[1]];
  const Linear& den = ratio[L.src[0]];
  return algebra::MobiusTransformation(-s2[0] * num.c1, -s2[0] * num.c0, s1[0] * den.c1, s1[0] * den.c0);
}

// Gaussian elimination; returns the unique solution or nullopt.
std::optional<std::vector<Cyclo>> solve(std::vector<std::vector<Cyclo>> rows, std::vector<Cyclo> rhs, int n) {
  const int nr = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < nr; ++c) {
    int p = r;
    while (p < nr && rows[p][c].is_zero()) ++p;
    if (p == nr) return std::nullopt;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Cyclo inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Cyclo f = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < n) return std::nullopt;
  for (int i = r; i < nr; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<Cyclo> x(n, Cyclo(0L));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::optional<FermatAlpha> radical_root(const Cyclo& value, const std::vector<Cyclo>& lambda, int N) {
  for (int k = 0; k <= static_cast<int>(lambda.size()); ++k) {
    Cyclo ratio = k == 0 ? value : value / lambda[k - 1];
    for (int e = 0; e < N; ++e) {
      Cyclo c = Cyclo::zeta(N, e);
      if (c * c != ratio) continue;
      FermatAlpha a{k, c.minimize(), ""};
      std::string unit = a.unit.is_one() ? "" : (a.unit == Cyclo::zeta(4) ? "i" : "(" + a.unit.to_string() + ")");
      if (k == 0)
        a.text = unit.empty() ? "1" : unit;
      else
        a.text = (unit.empty() ? "" : unit + "*") + "sqrt(lambda_" + std::to_string(k) + ")";
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace

FermatReport verify_fermat_action(int m, unsigned seed) {
  if (m > 8) throw Error(ErrorCode::MTooLarge, "fermat action is limited to m <= 8, got " + std::to_string(m));
  if (m < 5) throw Error(ErrorCode::OutOfRange, "fermat action needs m >= 5, got " + std::to_string(m));
  FermatReport rep;
  rep.m = m;
  rep.genus_c = covering::fermat_genus(m);
  auto bd = covering::branch_data(m);
  rep.lambda = bd.lambda;
  std::vector<Cyclo> lambda0{Cyclo(1L)};
  lambda0.insert(lambda0.end(), bd.lambda.begin(), bd.lambda.end());
  const auto ratio = square_ratios(lambda0);
  const int N = std::lcm(4, m);
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

  // T: position 0 reads x_m with coefficient 1, position p reads x_p with alpha_p.
  std::vector<int> tsrc(m);
  tsrc[0] = m - 1;
  for (int p = 1; p < m; ++p) tsrc[p] = p - 1;

  // unknowns u_p = alpha_p^2, p = 1..m-1; two linear equations per quadric
  std::vector<std::vector<Cyclo>> rows;
  std::vector<Cyclo> rhs;
  for (int k = 0; k + 2 < m; ++k) {
    std::vector<Cyclo> r0(m - 1, Cyclo(0L)), r1(m - 1, Cyclo(0L));
    Cyclo b0(0L), b1(0L);
    for (const auto& [p, w] : quadric(lambda0, k)) {
      const Linear& lin = ratio[tsrc[p]];
      if (p == 0) {
        b0 -= w * lin.c0;
        b1 -= w * lin.c1;
      } else {
        r0[p - 1] += w * lin.c0;
        r1[p - 1] += w * lin.c1;
      }
    }
    rows.push_back(r0);
    rhs.push_back(b0);
    rows.push_back(r1);
    rhs.push_back(b1);
  }
  auto sol = solve(rows, rhs, m - 1);
  if (!sol) throw Error(ErrorCode::NoSolution, "no linear T of the displayed shape preserves C for m=" + std::to_string(m));
  rep.alpha_squared = *sol;

  RadicalAlgebra R(bd.lambda);
  MonomialMap T{tsrc, {R.scalar(Cyclo(1L))}};
  for (int p = 1; p < m; ++p) {
    auto a = radical_root((*sol)[p - 1], bd.lambda, N);
    if (!a) throw Error(ErrorCode::NoSolution, "alpha_" + std::to_string(p) + "^2 = " + (*sol)[p - 1].to_string() +
                                                   " has no root of the form c*s_k");
    rep.alpha.push_back(*a);
    T.coeff.push_back(a->radical == 0 ? R.scalar(a->unit) : R.scaled(R.radical(a->radical), a->unit));
  }

  // U: [x_1 : x_m : i x_{m-1} : ... : i x_3 : x_2]
  MonomialMap U;
  for (int p = 0; p < m; ++p) {
    U.src.push_back(p == 0 ? 0 : m - p);
    U.coeff.push_back(R.scalar(p >= 2 && p <= m - 2 ? Cyclo::zeta(4) : Cyclo(1L)));
  }

  auto sign = [&](int j) {  // a_j, 1-based
    MonomialMap a;
    for (int p = 0; p < m; ++p) {
      a.src.push_back(p);
      a.coeff.push_back(R.scalar(p == j - 1 ? Cyclo(-1L) : Cyclo(1L)));
    }
    return a;
  };

  rep.t_preserves_curve = preserves_curve(R, T, lambda0, ratio);
  if (!rep.t_preserves_curve) fail("T does not preserve C");
  rep.u_preserves_curve = preserves_curve(R, U, lambda0, ratio);
  if (!rep.u_preserves_curve) fail("U does not preserve C");
  auto it = induced(R, T, ratio);
  rep.pi_t = it && *it == bd.T;
  if (!rep.pi_t) fail("pi o T != T~ o pi");
  auto iu = induced(R, U, ratio);
  rep.pi_u = iu && *iu == bd.U;
  if (!rep.pi_u) fail("pi o U != U~ o pi");
  for (int j = 1; j <= m; ++j) {
    bool ok = monomial_projective_equal(R, monomial_compose(R, T, sign(j)), monomial_compose(R, sign(j % m + 1), T));
    rep.t_conjugation.push_back(ok);
    if (!ok) fail("T o a_" + std::to_string(j) + " != a_" + std::to_string(j % m + 1) + " o T");
  }
  MonomialMap u2 = monomial_compose(R, U, U);
  rep.u_squared_in_f = monomial_in_sign_group(R, u2) && R.equal(u2.coeff[1], u2.coeff[0]) &&
                       R.equal(u2.coeff[m - 1], u2.coeff[0]);
  for (int p = 2; p < m - 1; ++p)
    rep.u_squared_in_f = rep.u_squared_in_f && R.equal(u2.coeff[p], R.scaled(u2.coeff[0], Cyclo(-1L)));
  if (!rep.u_squared_in_f) fail("U^2 is not the displayed sign change");

  MonomialMap id{sign(1).src, std::vector<Elem>(m, R.scalar(Cyclo(1L)))};
  MonomialMap power = T;
  bool early = false;
  for (int k = 1; k < m; ++k) {
    early = early || monomial_projective_equal(R, power, id);
    power = monomial_compose(R, T, power);
  }
  rep.t_order_m = !early && monomial_projective_equal(R, power, id);
  if (!rep.t_order_m) fail("T does not have order m modulo scalars");
  MonomialMap ut = monomial_compose(R, U, T);
  rep.dihedral = monomial_in_sign_group(R, monomial_compose(R, ut, ut));
  if (!rep.dihedral) fail("(U T)^2 not in F");
  rep.genus_consistent = 1 + (rep.genus_c - 1) / (1L << (m - 3)) == m - 3 && (rep.genus_c - 1) % (1L << (m - 3)) == 0;
  if (!rep.genus_consistent) fail("genus of C/H is not m-3");

  // float cross-check: random points of C, T applied numerically
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  auto eval_mobius = [](const algebra::MobiusTransformation& M, std::complex<double> z) {
    return (M.a().to_complex() * z + M.b().to_complex()) / (M.c().to_complex() * z + M.d().to_complex());
  };
  for (int trial = 0; trial < 3; ++trial) {
    std::complex<double> z(dist(rng), dist(rng));
    std::vector<std::complex<double>> x(m);
    for (int q = 0; q < m; ++q) x[q] = std::sqrt(ratio[q].c0.to_complex() + ratio[q].c1.to_complex() * z);
    for (const MonomialMap* L : {&T, &U}) {
      std::vector<std::complex<double>> y(m);
      for (int p = 0; p < m; ++p) y[p] = R.to_complex(L->coeff[p]) * x[L->src[p]];
      double scale = 0;
      for (auto v : y) scale = std::max(scale, std::abs(v) * std::abs(v));
      for (int k = 0; k + 2 < m; ++k) {
        std::complex<double> q = lambda0[k].to_complex() * y[0] * y[0] + y[1] * y[1] + y[k + 2] * y[k + 2];
        rep.float_residual = std::max(rep.float_residual, std::abs(q) / scale);
      }
      std::complex<double> pz = -(y[1] / y[0]) * (y[1] / y[0]);
      std::complex<double> expect = eval_mobius(L == &T ? bd.T : bd.U, z);
      rep.float_residual = std::max(rep.float_residual, std::abs(pz - expect) / std::max(1.0, std::abs(expect)));
    }
  }
  if (rep.float_residual > 1e-9) fail("float cross-check residual " + std::to_string(rep.float_residual));
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace qplab::curves
