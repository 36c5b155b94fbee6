#include "qplab/rep/group_algebra.hpp"

#include "qplab/errors.hpp"

namespace qplab::rep {

GroupAlgebraElement::GroupAlgebraElement(const groups::FiniteGroup& G, int field_order)
    : group_(&G), coeffs_(G.order(), Cyclo::zero(field_order)) {}

GroupAlgebraElement GroupAlgebraElement::basis(const groups::FiniteGroup& G, int g, int field_order) {
  GroupAlgebraElement x(G, field_order);
  x.coeffs_[g] = Cyclo::one(field_order);
  return x;
}

int GroupAlgebraElement::support_size() const {
  int s = 0;
  for (const auto& c : coeffs_) s += !c.is_zero();
  return s;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (group_ != o.group_) throw Error(ErrorCode::InvalidArgument, "group algebra elements over different groups");
  GroupAlgebraElement r(*group_, coeffs_.empty() ? 1 : coeffs_[0].order());
  const int n = group_->order();
  for (int g = 0; g < n; ++g) {
    if (coeffs_[g].is_zero()) continue;
    for (int h = 0; h < n; ++h) {
      if (o.coeffs_[h].is_zero()) continue;
      r.coeffs_[group_->mul(g, h)] += coeffs_[g] * o.coeffs_[h];
    }
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Cyclo& c) const {
  GroupAlgebraElement r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  if (group_ != o.group_) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

bool GroupAlgebraElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool GroupAlgebraElement::is_rational() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

bool GroupAlgebraElement::is_central() const {
  const int n = group_->order();
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < n; ++g)
      if (coeffs_[group_->conj(x, g)] != coeffs_[g]) return false;
  return true;
}

GroupAlgebraElement subgroup_idempotent(const CharacterTable& t, const groups::Subgroup& H) {
  GroupAlgebraElement p(*t.group, t.exponent);
  Cyclo w = Cyclo::one(t.exponent) / Cyclo(static_cast<long>(H.order()));
  for (int h : H.elements) p.set(h, w);
  return p;
}

GroupAlgebraElement family_idempotent(const CharacterTable& t, const RationalIrrepFamily& fam) {
  const auto& G = *t.group;
  GroupAlgebraElement e(G, t.exponent);
  for (int row : fam.orbit) {
    Cyclo w = Cyclo(static_cast<long>(t.degree(row))) / Cyclo(static_cast<long>(G.order()));
    for (int g = 0; g < G.order(); ++g) e.set(g, e.coeff(g) + w * t.value(row, G.inv(g)));
  }
  return e;
}

Idempotents idempotents(const CharacterTable& t, const groups::Subgroup& H) {
  Idempotents out{subgroup_idempotent(t, H), {}, {}};
  for (const auto& fam : rational_irreps(t)) {
    out.e.push_back(family_idempotent(t, fam));
    out.f.push_back(out.p_H * out.e.back());
  }
  return out;
}

}  // namespace qplab::rep
