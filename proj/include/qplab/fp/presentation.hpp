#pragma once

#include <string>
#include <vector>

namespace qplab::fp {

// Letters are +(i+1) for generator i and -(i+1) for its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int e);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word conjugate(const Word& w, const Word& by);  // by w by^-1

struct Presentation {
  std::vector<std::string> gen_names;
  std::vector<Word> relators;  // freely reduced

  int ngens() const { return static_cast<int>(gen_names.size()); }
  Word letter(const std::string& name) const;
  // Word syntax: products (explicit '*' or juxtaposition), powers "^n",
  // parentheses, commutators "[a,b]" and relations "lhs=rhs" (giving
  // lhs rhs^-1). Juxtaposed names are matched longest-first.
  Word parse_word(const std::string& text) const;
  std::string to_string(const Word& w) const;
  std::string to_string() const;

  // Text form: first line lists generators, then one relator per line.
  // Commas in a line separate several relators; '#' starts a comment.
  static Presentation parse(const std::string& text);
  // Generators plus relator strings, each possibly containing "=" chains
  // such as "x^3=y^4=1".
  static Presentation make(std::vector<std::string> gens, const std::vector<std::string>& relations);
};

}  // namespace qplab::fp
