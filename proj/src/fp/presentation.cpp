#include "qplab/fp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::fp {

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

Word power(const Word& w, int e) {
  Word base = e < 0 ? inverse(w) : w;
  Word r;
  for (int i = 0; i < std::abs(e); ++i) r.insert(r.end(), base.begin(), base.end());
  return free_reduce(r);
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Word conjugate(const Word& w, const Word& by) { return concat(concat(by, w), inverse(by)); }

Word Presentation::letter(const std::string& name) const {
  auto it = std::find(gen_names.begin(), gen_names.end(), name);
  if (it == gen_names.end()) throw Error(ErrorCode::UnknownGeneratorName, "unknown generator '" + name + "'");
  return {static_cast<int>(it - gen_names.begin()) + 1};
}

namespace {

class WordParser {
 public:
  WordParser(const Presentation& p, const std::string& s) : p_(p), s_(s) {}

  Word parse_relation() {
    std::vector<Word> sides{product()};
    while (peek() == '=') {
      ++pos_;
      sides.push_back(product());
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    if (sides.size() == 1) return sides[0];
    if (sides.size() == 2) return concat(sides[0], inverse(sides[1]));
    fail("use make() for relation chains");
    return {};
  }

  std::vector<Word> parse_chain() {
    std::vector<Word> sides{product()};
    while (peek() == '=') {
      ++pos_;
      sides.push_back(product());
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    std::vector<Word> rels;
    if (sides.size() == 1) return sides;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) rels.push_back(concat(sides[i], inverse(sides[i + 1])));
    return rels;
  }

 private:
  const Presentation& p_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Word product() {
    Word w;
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        w = concat(w, factor());
        continue;
      }
      break;
    }
    return w;
  }

  Word factor() {
    Word base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = product();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      Word a = product();
      if (peek() != ',') fail("expected ','");
      ++pos_;
      Word b = product();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      base = commutator(a, b);
    } else if (c == '1') {
      ++pos_;
    } else {
      base = name();
    }
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected exponent");
      base = power(base, std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Word name() {
    // longest generator name matching at pos_
    std::size_t best = 0;
    int idx = -1;
    for (int i = 0; i < p_.ngens(); ++i) {
      const auto& n = p_.gen_names[i];
      if (n.size() > best && s_.compare(pos_, n.size(), n) == 0) {
        best = n.size();
        idx = i;
      }
    }
    if (idx < 0) fail("unknown generator");
    pos_ += best;
    return {idx + 1};
  }
};

}  // namespace

Word Presentation::parse_word(const std::string& text) const { return WordParser(*this, text).parse_relation(); }

std::string Presentation::to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int run = static_cast<int>(j - i);
    int l = w[i];
    if (!first) os << "*";
    first = false;
    os << gen_names[std::abs(l) - 1];
    int e = l > 0 ? run : -run;
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gen_names.size(); ++i) os << (i ? "," : "") << gen_names[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << to_string(relators[i]);
  os << ">";
  return os.str();
}

Presentation Presentation::make(std::vector<std::string> gens, const std::vector<std::string>& relations) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "presentation needs at least one generator");
  Presentation p;
  p.gen_names = std::move(gens);
  for (const auto& r : relations) {
    for (auto& w : WordParser(p, r).parse_chain()) {
      w = free_reduce(w);
      if (!w.empty()) p.relators.push_back(w);
    }
  }
  return p;
}

Presentation Presentation::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty presentation");
  std::vector<std::string> gens;
  {
    std::string g;
    for (char c : lines[0]) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!g.empty()) gens.push_back(g);
        g.clear();
      } else {
        g += c;
      }
    }
    if (!g.empty()) gens.push_back(g);
  }
  std::vector<std::string> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    // split on commas outside brackets
    int depth = 0;
    std::string cur;
    for (char c : lines[i]) {
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (c == ',' && depth == 0) {
        rels.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (cur.find_first_not_of(" \t\r") != std::string::npos) rels.push_back(cur);
  }
  return make(gens, rels);
}

}  // namespace qplab::fp
