#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace andgraph {

/// Exact rational number. All coordinates and constraint coefficients use it.
using Rational = mpq_class;

/// Parses "<num>" or "<num>/<den>" (optional leading '-').
/// The result is canonicalized; a zero denominator or stray characters throw
/// std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form, "<num>" when the denominator is 1.
std::string format_rational(const Rational& q);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

inline Rational abs_value(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

}  // namespace andgraph
