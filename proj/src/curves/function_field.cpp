#include "qplab/curves/function_field.hpp"

#include <numeric>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::curves {

namespace {

int popcount(int v) { return __builtin_popcount(static_cast<unsigned>(v)); }

}  // namespace

HyperPair HyperPair::make(UniPoly f, UniPoly g, std::vector<std::string> names) {
  HyperPair c;
  for (const auto* p : {&f, &g}) {
    if (p->degree() < 1) throw Error(ErrorCode::NotSquarefree, "radicand must have degree >= 1");
    if (!p->is_squarefree()) throw Error(ErrorCode::NotSquarefree, "radicand not squarefree: " + p->to_string());
  }
  auto h = algebra::gcd(f, g);
  if (h.degree() == f.degree() && h.degree() == g.degree())
    throw Error(ErrorCode::InvalidArgument, "f and g differ by a constant; the fiber product is reducible");
  c.radicands_ = {std::move(f), std::move(g)};
  names.resize(2);
  c.names_ = std::move(names);
  c.init();
  return c;
}

HyperPair HyperPair::hyperelliptic(UniPoly f, std::string name) {
  if (f.degree() < 1) throw Error(ErrorCode::NotSquarefree, "radicand must have degree >= 1");
  if (!f.is_squarefree()) throw Error(ErrorCode::NotSquarefree, "radicand not squarefree: " + f.to_string());
  HyperPair c;
  c.radicands_ = {std::move(f)};
  c.names_ = {std::move(name)};
  c.init();
  return c;
}

void HyperPair::init() {
  products_.assign(basis_size(), RationalFunction(1L));
  for (int mask = 0; mask < basis_size(); ++mask)
    for (int i = 0; i < rank(); ++i)
      if (mask >> i & 1) products_[mask] *= RationalFunction(radicands_[i]);
}

int HyperPair::base_order() const {
  int n = 1;
  for (const auto& p : radicands_) n = std::lcm(n, p.field_order());
  return n;
}

std::string HyperPair::to_string() const {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < rank(); ++i) os << (i ? ", " : "") << names_[i] << "^2 = " << radicands_[i].to_string();
  os << "}";
  return os.str();
}

FunctionFieldElement::FunctionFieldElement(const HyperPair& c) : curve_(&c), c_(c.basis_size()) {}

FunctionFieldElement::FunctionFieldElement(const HyperPair& c, const RationalFunction& r)
    : curve_(&c), c_(c.basis_size()) {
  c_[0] = r;
}

FunctionFieldElement::FunctionFieldElement(const HyperPair& c, std::vector<RationalFunction> coeffs)
    : curve_(&c), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != c.basis_size())
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match the curve");
}

FunctionFieldElement FunctionFieldElement::radical(const HyperPair& c, int i) {
  if (i < 0 || i >= c.rank()) throw Error(ErrorCode::OutOfRange, "radical index out of range");
  FunctionFieldElement e(c);
  e.c_[1 << i] = RationalFunction(1L);
  return e;
}

void FunctionFieldElement::check_same(const FunctionFieldElement& o) const {
  if (curve_ != o.curve_ && !(*curve_ == *o.curve_))
    throw Error(ErrorCode::CurveMismatch, "elements live on different curves");
}

bool FunctionFieldElement::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool FunctionFieldElement::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

FunctionFieldElement FunctionFieldElement::operator-() const {
  FunctionFieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FunctionFieldElement& FunctionFieldElement::operator+=(const FunctionFieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FunctionFieldElement& FunctionFieldElement::operator-=(const FunctionFieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FunctionFieldElement& FunctionFieldElement::operator*=(const FunctionFieldElement& o) {
  check_same(o);
  const int n = curve_->basis_size();
  std::vector<RationalFunction> out(n);
  for (int s = 0; s < n; ++s) {
    if (c_[s].is_zero()) continue;
    for (int t = 0; t < n; ++t) {
      if (o.c_[t].is_zero()) continue;
      RationalFunction term = c_[s] * o.c_[t];
      if (s & t) term *= curve_->radicand_product(s & t);
      out[s ^ t] += term;
    }
  }
  c_ = std::move(out);
  return *this;
}

FunctionFieldElement& FunctionFieldElement::operator/=(const FunctionFieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const FunctionFieldElement& a, const FunctionFieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

FunctionFieldElement FunctionFieldElement::scaled(const RationalFunction& r) const {
  FunctionFieldElement e = *this;
  for (auto& c : e.c_) c *= r;
  return e;
}

FunctionFieldElement FunctionFieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FunctionFieldElement result(*curve_, RationalFunction(1L)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FunctionFieldElement FunctionFieldElement::conjugate(int flip) const {
  FunctionFieldElement e = *this;
  for (int s = 0; s < curve_->basis_size(); ++s)
    if (popcount(s & flip) % 2) e.c_[s] = -e.c_[s];
  return e;
}

RationalFunction FunctionFieldElement::norm() const {
  FunctionFieldElement p = *this;
  for (int flip = 1; flip < curve_->basis_size(); ++flip) p *= conjugate(flip);
  if (!p.in_base()) throw Error(ErrorCode::Internal, "norm left the base field");
  return p.c_[0];
}

FunctionFieldElement FunctionFieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero function-field element");
  FunctionFieldElement adj(*curve_, RationalFunction(1L));
  for (int flip = 1; flip < curve_->basis_size(); ++flip) adj *= conjugate(flip);
  FunctionFieldElement p = adj * *this;
  if (!p.in_base() || p.c_[0].is_zero()) throw Error(ErrorCode::Internal, "degenerate norm");
  return adj.scaled(p.c_[0].inverse());
}

std::complex<double> FunctionFieldElement::eval(std::complex<double> x,
                                                const std::vector<std::complex<double>>& radicals) const {
  std::complex<double> s = 0;
  for (int mask = 0; mask < curve_->basis_size(); ++mask) {
    if (c_[mask].is_zero()) continue;
    std::complex<double> term = c_[mask].eval(x);
    for (int i = 0; i < curve_->rank(); ++i)
      if (mask >> i & 1) term *= radicals[i];
    s += term;
  }
  return s;
}

std::string FunctionFieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int mask = 0; mask < curve_->basis_size(); ++mask) {
    if (c_[mask].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[mask].to_string() << ")";
    for (int i = 0; i < curve_->rank(); ++i)
      if (mask >> i & 1) os << "*" << curve_->names()[i];
  }
  return first ? "0" : os.str();
}

FFE ff_mul(const FFE& a, const FFE& b) { return a * b; }
FFE ff_div(const FFE& a, const FFE& b) { return a / b; }
bool ff_equal(const FFE& a, const FFE& b) { return a == b; }

FFE evaluate_at(const RationalFunction& r, const FFE& e) {
  if (e.in_base()) return FFE(e.curve(), r.compose(e.coeff(0)));
  auto horner = [&](const UniPoly& p) {
    FFE acc(e.curve());
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * e + FFE(e.curve(), RationalFunction(*it));
    return acc;
  };
  return horner(r.num()) / horner(r.den());
}

int hyperelliptic_genus(const UniPoly& h) {
  if (h.degree() < 1 || !h.is_squarefree())
    throw Error(ErrorCode::NotSquarefree, "hyperelliptic_genus needs a squarefree polynomial");
  return (h.degree() - 1) / 2;
}

}  // namespace qplab::curves
