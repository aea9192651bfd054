#pragma once

#include <map>
#include <string>
#include <vector>

#include "zgu/rational.hpp"

namespace zgu {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^n - 1 by Phi_d for the proper divisors d.
const std::vector<Integer> &cyclotomic_polynomial(long n);

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo Phi_n. The representation is unique for a fixed conductor;
/// operands of different conductor are promoted to the lcm.
class Cyclotomic {
public:
  /// zero in Q
  Cyclotomic();
  Cyclotomic(const Rational &r); // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {} // NOLINT(google-explicit-constructor)

  /// Reduces sum_k raw[k] zeta_n^k modulo Phi_n. Exponents are taken mod n.
  static Cyclotomic normalize(long conductor, const std::map<long, Rational> &raw);
  static Cyclotomic zeta(long conductor, long exponent = 1);

  long conductor() const noexcept { return conductor_; }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws Error("NotRational") unless every non-constant coefficient is zero.
  Rational as_rational() const;

  /// The same element written over conductor m (requires conductor() | m).
  Cyclotomic embed(long m) const;

  /// sigma_s: zeta -> zeta^s. Throws Error("NotCoprime").
  Cyclotomic galois(long s) const;
  Cyclotomic conj() const { return galois(-1); }

  /// Sum of the Galois conjugates over Q(zeta_n), n = conductor().
  Rational trace() const;
  /// Trace down from Q(zeta_m); the element must lie in Q(zeta_m).
  Rational trace_over(long m) const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Rational &r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational &r) { return a *= r; }
  friend Cyclotomic operator*(const Rational &r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
  friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

  /// e.g. "2 + zeta7^1 - 1/3*zeta7^4"
  std::string to_string() const;

private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs);

  long conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Free-function names for the operations the rest of the code refers to.
inline Cyclotomic galois_apply(const Cyclotomic &a, long s) { return a.galois(s); }
inline Rational trace_to_rationals(const Cyclotomic &a) { return a.trace(); }
inline Rational as_rational(const Cyclotomic &a) { return a.as_rational(); }

} // namespace zgu
