#include "qplab/covering/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::covering {

using algebra::Rational;

Signature::Signature(int g, std::vector<int> p) : genus(g), periods(std::move(p)) {
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "signature genus must be >= 0");
  for (int n : periods)
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "signature periods must be >= 2");
  std::sort(periods.begin(), periods.end());
}

Signature Signature::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorCode::ParseError, "signature must look like (0;2,6,6): " + text);
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  std::string g = semi == std::string::npos ? s : s.substr(0, semi);
  std::vector<int> periods;
  try {
    int genus = std::stoi(g);
    if (semi != std::string::npos) {
      std::string rest = s.substr(semi + 1);
      if (rest != "-" && !rest.empty()) {
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) periods.push_back(std::stoi(tok));
      }
    }
    return Signature(genus, periods);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad signature: " + text);
  }
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(" << genus << ";";
  if (periods.empty()) os << "-";
  for (std::size_t i = 0; i < periods.size(); ++i) os << (i ? "," : "") << periods[i];
  os << ")";
  return os.str();
}

Rational Signature::orbifold_characteristic() const {
  Rational r(2 * genus - 2);
  for (int n : periods) r += algebra::make_rational(n - 1, n);
  return r;
}

int genus_from_rh(long order, const Signature& sig) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  Rational chi = Rational(order) * sig.orbifold_characteristic();  // 2g - 2
  chi.canonicalize();
  if (chi.get_den() != 1 || chi.get_num() % 2 != 0 || chi < -2)
    throw Error(ErrorCode::NonIntegralGenus,
                "Riemann-Hurwitz gives 2g-2 = " + chi.get_str() + " for order " + std::to_string(order) + " and " +
                    sig.to_string());
  return static_cast<int>(chi.get_num().get_si() / 2 + 1);
}

}  // namespace qplab::covering
