#include "qplab/algebra/multipoly.hpp"

#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::algebra {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw Error(ErrorCode::OutOfRange, "MultiPoly supports at most 16 variables");
}

MultiPoly::MultiPoly(int nvars, const Cyclo& c) : MultiPoly(nvars) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::OutOfRange, "variable index out of range");
  MultiPoly p(nvars);
  Monomial m{};
  m[index] = 1;
  p.terms_.emplace(m, Cyclo(1));
  return p;
}

MultiPoly MultiPoly::term(int nvars, const Cyclo& c, const std::vector<int>& exps) {
  MultiPoly p(nvars);
  Monomial m{};
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255 || static_cast<int>(i) >= nvars)
      throw Error(ErrorCode::OutOfRange, "monomial exponent out of range");
    m[i] = static_cast<std::uint8_t>(exps[i]);
  }
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool MultiPoly::has_rational_coeffs() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int v = 0; v < nvars_; ++v) s += m[v];
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
  return d;
}

Cyclo MultiPoly::coeff(const std::vector<int>& exps) const {
  Monomial m{};
  for (std::size_t i = 0; i < exps.size() && i < kMaxVars; ++i) m[i] = static_cast<std::uint8_t>(exps[i]);
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclo() : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{};
      for (int v = 0; v < kMaxVars; ++v) {
        int e = ma[v] + mb[v];
        if (e > 255) throw Error(ErrorCode::OutOfRange, "monomial exponent overflow");
        m[v] = static_cast<std::uint8_t>(e);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Cyclo& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (m != ib->first || c != ib->second) return false;
    ++ib;
  }
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly result(nvars_, Cyclo(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::galois(long k) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.galois(k));
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) < nvars_) throw Error(ErrorCode::InvalidArgument, "too few substitutes");
  int nv = subs.empty() ? 0 : subs[0].nvars();
  for (const auto& s : subs) nv = std::max(nv, s.nvars());
  std::vector<MultiPoly> vals(subs.begin(), subs.begin() + nvars_);
  for (auto& v : vals) v.nvars_ = nv;
  return evaluate<MultiPoly>(vals, MultiPoly(nv), MultiPoly(nv, Cyclo(1)),
                             [nv](const Cyclo& c) { return MultiPoly(nv, c); });
}

MultiPoly MultiPoly::minimized() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.minimize());
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool is_one_mono = (m == Monomial{});
    std::string cs = c.to_string();
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (is_one_mono) {
      os << cs;
      continue;
    }
    if (!c.is_one()) os << cs << "*";
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (!m[v]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v + 1));
      if (m[v] > 1) os << "^" << static_cast<int>(m[v]);
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const { return to_string({}); }

}  // namespace qplab::algebra
