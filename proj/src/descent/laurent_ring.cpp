#include "qplab/descent/laurent_ring.hpp"

#include "qplab/errors.hpp"

namespace qplab::descent {

using curves::FFE;
using RF = algebra::RationalFunction;

LaurentPoly LaurentPoly::from_poly(const algebra::UniPoly& p, int shift) {
  LaurentPoly l;
  l.low = shift;
  for (int i = 0; i <= p.degree(); ++i) l.c.push_back(p.coeff(i));
  l.trim();
  return l;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < c.size() && c[lead].is_zero()) ++lead;
  if (lead == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(lead));
  low += static_cast<int>(lead);
  while (c.back().is_zero()) c.pop_back();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low, o.low), hi = std::max(high(), o.high());
  std::vector<Cyclo> r(static_cast<std::size_t>(hi - lo + 1), Cyclo(0L));
  for (std::size_t i = 0; i < c.size(); ++i) r[i + static_cast<std::size_t>(low - lo)] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i + static_cast<std::size_t>(o.low - lo)] += o.c[i];
  low = lo;
  c = std::move(r);
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, Cyclo(0L));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

LaurentRing::LaurentRing(const curves::HyperPair& curve) : curve_(&curve), basis_(curve.basis_size()) {
  for (const auto& f : curve.radicands()) radicands_.push_back(LaurentPoly::from_poly(f));
}

LaurentRing::Elem LaurentRing::constant(const Cyclo& c) const {
  Elem e = zero();
  e[0] = LaurentPoly::from_poly(algebra::UniPoly(c));
  return e;
}

LaurentRing::Elem LaurentRing::from_element(const FFE& e) const {
  Elem out = zero();
  for (int s = 0; s < basis_; ++s) {
    const RF& r = e.coeff(s);
    if (r.is_zero()) continue;
    const auto& den = r.den();
    for (int i = 0; i < den.degree(); ++i)
      if (!den.coeff(i).is_zero())
        throw Error(ErrorCode::InvalidArgument, "not a Laurent polynomial: " + r.to_string());
    out[s] = LaurentPoly::from_poly(r.num().divmod(algebra::UniPoly(den.coeff(den.degree()))).first, -den.degree());
  }
  return out;
}

FFE LaurentRing::to_element(const Elem& e) const {
  std::vector<RF> cs;
  for (const auto& l : e) {
    algebra::UniPoly num;
    for (std::size_t i = 0; i < l.c.size(); ++i)
      num += algebra::UniPoly::monomial(l.c[i], static_cast<int>(i) + std::max(l.low, 0));
    RF r(num);
    if (l.low < 0) r /= RF(algebra::UniPoly::monomial(Cyclo(1L), -l.low));
    cs.push_back(r);
  }
  return FFE(*curve_, cs);
}

LaurentRing::Elem LaurentRing::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int s = 0; s < basis_; ++s) r[s] += b[s];
  return r;
}

LaurentRing::Elem LaurentRing::mul(const Elem& a, const Elem& b) const {
  Elem r = zero();
  for (int s = 0; s < basis_; ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t < basis_; ++t) {
      if (b[t].is_zero()) continue;
      LaurentPoly p = a[s] * b[t];
      for (int i = 0, both = s & t; both; ++i, both >>= 1)
        if (both & 1) p = p * radicands_[i];
      r[s ^ t] += p;
    }
  }
  return r;
}

bool LaurentRing::is_zero(const Elem& a) const {
  for (const auto& l : a)
    if (!l.is_zero()) return false;
  return true;
}

namespace {

using Term = std::pair<algebra::Monomial, Cyclo>;

}  // namespace

LaurentRing::Elem LaurentRing::evaluate(const MultiPoly& p, const std::vector<Elem>& values) const {
  if (static_cast<int>(values.size()) < p.nvars())
    throw Error(ErrorCode::InvalidArgument, "evaluate: too few values");
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  // terms are sorted lexicographically by exponent vector, so each fixed
  // prefix is a contiguous block and Horner can run variable by variable
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi, int var) -> Elem {
    if (var == p.nvars()) {
      Elem e = zero();
      for (std::size_t i = lo; i < hi; ++i) e[0] += LaurentPoly::from_poly(algebra::UniPoly(terms[i].second));
      return e;
    }
    // blocks by exponent of var, highest first
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> blocks;
    for (std::size_t i = lo; i < hi;) {
      std::size_t j = i;
      while (j < hi && terms[j].first[var] == terms[i].first[var]) ++j;
      blocks.push_back({terms[i].first[var], {i, j}});
      i = j;
    }
    Elem acc = zero();
    int current = blocks.back().first;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      for (; current > it->first; --current) acc = mul(acc, values[var]);
      acc = add(acc, self(self, it->second.first, it->second.second, var + 1));
    }
    for (; current > 0; --current) acc = mul(acc, values[var]);
    return acc;
  };
  if (terms.empty()) return zero();
  return rec(rec, 0, terms.size(), 0);
}

}  // namespace qplab::descent
