#include "qplab/algebra/poly.hpp"

#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::algebra {

UniPoly::UniPoly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(const Cyclo& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}
UniPoly::UniPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

UniPoly UniPoly::monomial(const Cyclo& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Cyclo> v(degree + 1, Cyclo::zero(c.order()));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Cyclo> v;
  for (long a : ascending) v.emplace_back(a);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclo UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Cyclo();
  return c_[i];
}

Cyclo UniPoly::leading() const { return c_.empty() ? Cyclo() : c_.back(); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Cyclo> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Cyclo& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

UniPoly UniPoly::pow(int e) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {UniPoly(), *this};
  std::vector<Cyclo> rem = c_;
  std::vector<Cyclo> quo(degree() - d.degree() + 1);
  Cyclo lead_inv = d.leading().inverse();
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Cyclo q = rem[i] * lead_inv;
    quo[i - dd] = q;
    for (int k = 0; k <= dd; ++k) {
      if (!d.c_[k].is_zero()) rem[i - dd + k] -= q * d.c_[k];
    }
  }
  rem.resize(dd);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  if (leading().is_one()) return *this;
  UniPoly r = *this;
  r *= leading().inverse();
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Cyclo> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Cyclo(static_cast<long>(i)));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::galois(long k) const {
  std::vector<Cyclo> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.galois(k));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly result;
  for (int i = degree(); i >= 0; --i) {
    result *= q;
    result += UniPoly(c_[i]);
  }
  return result;
}

UniPoly UniPoly::scale_var(const Cyclo& s) const {
  UniPoly r = *this;
  Cyclo p(1);
  for (auto& c : r.c_) {
    c *= p;
    p *= s;
  }
  r.trim();
  return r;
}

Cyclo UniPoly::eval(const Cyclo& v) const {
  Cyclo acc;
  for (int i = degree(); i >= 0; --i) acc = acc * v + c_[i];
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> v) const {
  std::complex<double> acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * v + c_[i].to_complex();
  return acc;
}

bool UniPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

int UniPoly::field_order() const {
  int n = 1;
  for (const auto& c : c_) n = lcm_int(n, c.order());
  return n;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[i].to_string();
    bool simple = c_[i].is_rational();
    if (i == 0) {
      os << (simple ? cs : "(" + cs + ")");
      continue;
    }
    if (!c_[i].is_one()) os << (simple ? cs : "(" + cs + ")") << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace qplab::algebra
