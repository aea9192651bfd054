#include "zgu/pa.hpp"

#include <algorithm>

#include "zgu/error.hpp"

namespace zgu {

std::int64_t PAVector::augmentation() const {
  std::int64_t s = 0;
  for (auto v : entries_)
    s += v;
  return s;
}

std::vector<std::size_t> PAVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < entries_.size(); ++c)
    if (entries_[c] != 0)
      out.push_back(c);
  return out;
}

TorsionUnitCandidate delta_tower(const ClassTable &classes, const Permutation &g) {
  TorsionUnitCandidate t;
  t.order = g.order();
  for (long d : divisors(t.order))
    if (d < t.order)
      t.pav_by_divisor[d] = PAVector::delta(classes.size(), classes.class_of(g.pow(d)));
  return t;
}

const PAVector &support_restrict(const PAVector &pav, const ClassTable &classes, long n) {
  if (n < 1)
    throw Error("InvalidArgument", "order must be positive");
  std::string bad;
  for (std::size_t c : pav.support())
    if (c >= classes.size() || n % classes[c].element_order != 0)
      bad += (bad.empty() ? "" : ", ") +
             (c < classes.size() ? classes[c].name : "#" + std::to_string(c));
  if (!bad.empty())
    throw Error("SupportViolation", "classes of order not dividing " + std::to_string(n) + ": " + bad);
  return pav;
}

BHVerdict berman_higman(const PAVector &pav, const ClassTable &classes,
                        const std::vector<std::size_t> &center_classes) {
  (void)classes;
  const auto supp = pav.support();
  for (std::size_t z : center_classes) {
    if (pav[z] == 0)
      continue;
    if (pav[z] == 1 && supp.size() == 1)
      return {BHKind::Identified, z};
    return {BHKind::Rejected, z};
  }
  return {BHKind::Passed, std::nullopt};
}

CLVerdict cohn_livingstone(const TorsionUnitCandidate &candidate, const ClassTable &classes) {
  const long n = candidate.order;
  for (long p : prime_factors(n))
    for (long q = p; n % q == 0; q *= p) {
      const long d = n / q;
      const PAVector &pav = candidate.power(d);
      bool hit = false;
      for (std::size_t c : pav.support())
        if (c < classes.size() && classes[c].element_order == q)
          hit = true;
      if (!hit)
        return {false, q};
    }
  return {true, 0};
}

PAVector galois_power(const PAVector &pav, const ClassTable &classes, long n, long s) {
  if (gcd_l(mod_l(s, n), n) != 1)
    throw Error("NotCoprime", std::to_string(s) + " is not coprime to " + std::to_string(n));
  support_restrict(pav, classes, n);
  const long t = inverse_mod(s, n);
  const auto &pi_t = classes.power_map(t);
  PAVector out(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (n % classes[c].element_order == 0)
      out.at(c) = pav[pi_t[c]];
  return out;
}

TorsionUnitCandidate galois_power(const TorsionUnitCandidate &candidate, const ClassTable &classes,
                                  long s) {
  TorsionUnitCandidate out;
  out.order = candidate.order;
  for (const auto &[d, pav] : candidate.pav_by_divisor) {
    const long m = candidate.order / d;
    out.pav_by_divisor[d] = galois_power(pav, classes, m, mod_l(s, m));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> galois_sum(const PAVector &pav, const ClassTable &classes,
                                                 long n, std::size_t c) {
  std::int64_t lhs = 0, rhs = 0;
  for (long s = 1; s <= n; ++s) {
    if (gcd_l(s, n) != 1)
      continue;
    lhs += galois_power(pav, classes, n, s)[c];
    rhs += pav[classes.power_map(s)[c]];
  }
  return {lhs, rhs};
}

bool order_p_classes_are_powers(const ClassTable &classes, long p, std::size_t x_class) {
  if (classes[x_class].element_order != p)
    return false;
  std::vector<bool> reached(classes.size(), false);
  for (long i = 1; i < p; ++i)
    reached[classes.power_map(i)[x_class]] = true;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].element_order == p && !reached[c])
      return false;
  return true;
}

PAVector order_p_sum(const PAVector &pav, const ClassTable &classes, long p, std::size_t x_class) {
  if (!is_prime(p))
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  if (!order_p_classes_are_powers(classes, p, x_class))
    throw Error("HypothesisViolated", "not every class of order " + std::to_string(p) +
                                          " is a power of " + classes[x_class].name);
  PAVector sum(classes.size());
  for (long i = 1; i < p; ++i) {
    const PAVector ui = galois_power(pav, classes, p, i);
    for (std::size_t c = 0; c < classes.size(); ++c)
      sum.at(c) += ui[c];
  }
  long k = 0;
  for (const auto &cl : classes.classes())
    if (cl.element_order == p)
      ++k;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::int64_t expect = classes[c].element_order == p ? (p - 1) / k : 0;
    if (sum[c] != expect)
      throw Error("InconsistentCandidate",
                  "sum of powers has partial augmentation " + std::to_string(sum[c]) + " at " +
                      classes[c].name + ", expected " + std::to_string(expect));
  }
  return sum;
}

Cyclotomic character_value(const PAVector &pav, const std::vector<Cyclotomic> &row,
                           const ClassMatching &matching) {
  Cyclotomic v;
  for (std::size_t c : pav.support())
    v += row.at(matching.column_of_class.at(c)) * Rational(static_cast<long>(pav[c]));
  return v;
}

} // namespace zgu
