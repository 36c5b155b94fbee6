#include "qplab/algebra/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::algebra {

int gcd_int(int a, int b) { return std::gcd(a, b); }
int lcm_int(int a, int b) { return std::lcm(a, b); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::shared_ptr<const CycloField> build_field(int n) {
  auto f = std::make_shared<CycloField>();
  f->order = n;
  f->degree = euler_phi(n);

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division by monic factors.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = CycloField::get(d)->phi_poly;
    int dd = static_cast<int>(div.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<Integer> quo(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      Integer c = num[i];
      if (c == 0) continue;
      quo[i - dd] = c;
      for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * div[k];
    }
    num = std::move(quo);
  }
  f->phi_poly = std::move(num);

  const int phi = f->degree;
  f->powers.assign(n, std::vector<Integer>(phi, 0));
  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    f->powers[j] = cur;
    // multiply by zeta
    Integer top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->phi_poly[i];
    }
  }
  return f;
}

// Solves the square or overdetermined system A v = rhs over Q; returns
// false when inconsistent. Columns of A are given.
bool solve_columns(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& rhs,
                   std::vector<Rational>& out) {
  const std::size_t rows = rhs.size();
  const std::size_t ncols = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) a[r][c] = cols[c][r];
    a[r][ncols] = rhs[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k <= ncols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k <= ncols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (a[r][ncols] != 0) return false;
  }
  out.assign(ncols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = a[i][ncols];
  return true;
}

}  // namespace

std::shared_ptr<const CycloField> CycloField::get(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: construction recurses into get(d) for divisors.
  auto f = build_field(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(f)).first->second;
}

Cyclo::Cyclo() : field_(CycloField::get(1)), c_(1, 0) {}
Cyclo::Cyclo(const Rational& r) : field_(CycloField::get(1)), c_(1, r) {}
Cyclo::Cyclo(long v) : field_(CycloField::get(1)), c_(1, Rational(v)) {}

Cyclo::Cyclo(int n, std::vector<Rational> coeffs) : field_(CycloField::get(n)) {
  if (static_cast<int>(coeffs.size()) == field_->degree) {
    c_ = std::move(coeffs);
  } else {
    c_.assign(field_->degree, 0);
    reduce_from(coeffs);
  }
}

Cyclo Cyclo::zero(int n) { return Cyclo(n, std::vector<Rational>(euler_phi(n), 0)); }
Cyclo Cyclo::one(int n) { return from_rational(n, 1); }

Cyclo Cyclo::from_rational(int n, const Rational& r) {
  std::vector<Rational> c(euler_phi(n), 0);
  c[0] = r;
  return Cyclo(n, std::move(c));
}

Cyclo Cyclo::zeta(int n, long k) {
  Cyclo z = zero(n);
  long e = ((k % n) + n) % n;
  const auto& p = z.field_->powers[e];
  for (int i = 0; i < z.degree(); ++i) z.c_[i] = p[i];
  return z;
}

// Folds an arbitrary-length coefficient vector (in powers of zeta) into c_.
void Cyclo::reduce_from(std::vector<Rational>& wide) {
  const int phi = field_->degree;
  const auto& poly = field_->phi_poly;
  for (int j = static_cast<int>(wide.size()) - 1; j >= phi; --j) {
    if (wide[j] == 0) continue;
    if (j >= field_->order) {
      // zeta^j = zeta^(j mod n)
      wide[j % field_->order] += wide[j];
      wide[j] = 0;
      continue;
    }
    Rational t = wide[j];
    wide[j] = 0;
    for (int i = 0; i < phi; ++i) {
      if (poly[i] != 0) wide[j - phi + i] -= t * poly[i];
    }
  }
  c_.assign(phi, 0);
  for (int i = 0; i < phi && i < static_cast<int>(wide.size()); ++i) c_[i] = wide[i];
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

Cyclo Cyclo::embed(int N) const {
  const int n = order();
  if (N % n != 0) throw Error(ErrorCode::InvalidArgument, "cannot embed Q(zeta_" + std::to_string(n) +
                                                              ") into Q(zeta_" + std::to_string(N) + ")");
  if (N == n) return *this;
  Cyclo r = zero(N);
  const int step = N / n;
  for (int j = 0; j < degree(); ++j) {
    if (c_[j] == 0) continue;
    const auto& p = r.field_->powers[j * step];
    for (int i = 0; i < r.degree(); ++i) {
      if (p[i] != 0) r.c_[i] += c_[j] * p[i];
    }
  }
  return r;
}

Cyclo Cyclo::minimize() const {
  const int n = order();
  if (is_rational()) return Cyclo(c_[0]);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (d % 4 == 2) continue;  // Q(zeta_d) = Q(zeta_{d/2}) already tried
    bool fixed = true;
    for (int k = 1; k < n && fixed; ++k) {
      if (std::gcd(k, n) != 1 || k % d != 1 % d) continue;
      if (galois(k) != *this) fixed = false;
    }
    if (!fixed) continue;
    const int step = n / d;
    const int phid = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    for (int i = 0; i < phid; ++i) {
      const auto& p = field_->powers[i * step];
      cols.emplace_back(p.begin(), p.end());
    }
    std::vector<Rational> sol;
    if (solve_columns(cols, c_, sol)) return Cyclo(d, std::move(sol));
  }
  return *this;
}

Cyclo Cyclo::galois(long k) const {
  const int n = order();
  long kk = ((k % n) + n) % n;
  if (std::gcd(static_cast<long>(n), kk) != 1)
    throw Error(ErrorCode::NotCoprime, "galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(n));
  Cyclo r = zero(n);
  for (int j = 0; j < degree(); ++j) {
    if (c_[j] == 0) continue;
    const auto& p = field_->powers[(j * kk) % n];
    for (int i = 0; i < degree(); ++i) {
      if (p[i] != 0) r.c_[i] += c_[j] * p[i];
    }
  }
  return r;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
  if (a.order() == b.order()) return;
  int N = std::lcm(a.order(), b.order());
  a = a.embed(N);
  b = b.embed(N);
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.order() == 1 || o.order() == order()) {
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (order() == 1) {
    Rational r = c_[0];
    *this = o;
    c_[0] += r;
    return *this;
  }
  Cyclo b = o;
  align(*this, b);
  return *this += b;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.is_rational() && (o.order() == 1 || o.order() == order())) {
    const Rational& s = o.c_[0];
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (order() == 1 || (is_rational() && order() == o.order())) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (order() != o.order()) {
    Cyclo b = o;
    align(*this, b);
    return *this *= b;
  }
  const int phi = degree();
  std::vector<Rational> wide(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      wide[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_from(wide);
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic number");
  if (is_rational()) {
    Cyclo r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Columns are this * zeta^j; solve for the coordinates of 1.
  const int phi = degree();
  std::vector<std::vector<Rational>> cols;
  Cyclo cur = *this;
  Cyclo z = zeta(order(), 1);
  for (int j = 0; j < phi; ++j) {
    cols.push_back(cur.c_);
    cur *= z;
  }
  std::vector<Rational> rhs(phi, 0);
  rhs[0] = 1;
  std::vector<Rational> sol;
  if (!solve_columns(cols, rhs, sol)) throw Error(ErrorCode::Internal, "singular multiplication matrix");
  return Cyclo(order(), std::move(sol));
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result = one(order());
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order() == b.order()) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  return x.c_ == y.c_;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> s = 0;
  const double n = order();
  for (int j = 0; j < degree(); ++j) {
    if (c_[j] == 0) continue;
    double ang = 2.0 * std::numbers::pi * j / n;
    s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < degree(); ++j) {
    const Rational& c = c_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << order();
    if (j > 1) os << "^" << j;
  }
  if (first) return "0";
  return os.str();
}

Cyclo cyc_arith(const Cyclo& a, const Cyclo& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Div:
      if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "cyclotomic division by zero");
      return a / b;
  }
  throw Error(ErrorCode::Internal, "bad op");
}

}  // namespace qplab::algebra
