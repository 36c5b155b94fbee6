#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qplab::algebra {

// GMP rationals are always canonical (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q >= 1; integers are written "p/1".
std::string to_string(const Rational& r);

// Accepts "p/q" or "p". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qplab::algebra
