#pragma once

#include <map>
#include <string>
#include <vector>

namespace qplab::groups {

using Perm = std::vector<int>;

// Finite group given by its Cayley table on dense indices 0..n-1.
// Index 0 is always the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Validates the Latin square property, identity at 0 and associativity.
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {},
              std::map<std::string, int> distinguished = {});

  // Closure of a set of permutations (composition p*q means apply q, then p).
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, const std::vector<std::string>& gen_names = {});

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int element_order(int a) const;
  int exponent() const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(int a) const;
  const std::map<std::string, int>& distinguished() const { return distinguished_; }
  // Index of a distinguished generator; UnknownGeneratorName if absent.
  int gen(const std::string& name) const;
  void set_distinguished(const std::string& name, int index);
  void set_names(std::vector<std::string> names);

  // Product of a word in distinguished generators, e.g. {"a","t","t"}; a
  // trailing "^-1" inverts a letter.
  int eval_word(const std::vector<std::string>& word) const;
  // Parses products like "a*t^3*u^-1"; "1" or "e" is the identity.
  int parse(const std::string& expr) const;

  // Left-regular permutation of g (x -> g x).
  Perm left_perm(int g) const;

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::map<std::string, int> distinguished_;
};

}  // namespace qplab::groups
