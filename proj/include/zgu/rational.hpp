#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zgu {

/// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational &r) { return r.get_den() == 1; }

inline std::string to_string(const Rational &r) { return r.get_str(); }

/// Converts to int64, throwing if the value is not an integer in range.
std::int64_t to_int64(const Rational &r);

} // namespace zgu
