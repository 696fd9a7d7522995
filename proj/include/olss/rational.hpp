#pragma once

#include <gmpxx.h>

#include <string>

namespace olss {

/// Exact rational used for complexities, bounds and LP values.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_fraction(const Rational& q) { return q.get_str(); }

/// Fixed six-decimal rendering used next to the exact fraction in reports.
std::string to_decimal(const Rational& q, int digits = 6);

}  // namespace olss
