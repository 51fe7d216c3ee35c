#pragma once

#include <gmpxx.h>

#include <string>

namespace charvan {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" (den always printed, matching the wire format).
std::string rational_string(const Rational& r);

// Accepts "num" or "num/den".
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& r);

} // namespace charvan
