#pragma once

#include <vector>

#include "qplab/rep/character_table.hpp"

namespace qplab::rep {

// Element of Q(zeta)[G] as a coefficient vector indexed by group elements.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(const groups::FiniteGroup& G, int field_order);
  static GroupAlgebraElement basis(const groups::FiniteGroup& G, int g, int field_order);

  const groups::FiniteGroup& group() const { return *group_; }
  const Cyclo& coeff(int g) const { return coeffs_[g]; }
  void set(int g, const Cyclo& c) { coeffs_[g] = c; }
  int support_size() const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Cyclo& c) const;
  bool operator==(const GroupAlgebraElement& o) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_central() const;
  bool is_idempotent() const { return (*this * *this) == *this; }

 private:
  const groups::FiniteGroup* group_;
  std::vector<Cyclo> coeffs_;
};

struct Idempotents {
  GroupAlgebraElement p_H;                  // (1/|H|) sum_{h in H} h
  std::vector<GroupAlgebraElement> e;       // central idempotent per rational family
  std::vector<GroupAlgebraElement> f;       // p_H e_i
};

GroupAlgebraElement subgroup_idempotent(const CharacterTable& t, const groups::Subgroup& H);
GroupAlgebraElement family_idempotent(const CharacterTable& t, const RationalIrrepFamily& fam);
Idempotents idempotents(const CharacterTable& t, const groups::Subgroup& H);

}  // namespace qplab::rep
