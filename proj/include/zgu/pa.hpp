#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zgu/chartab.hpp"
#include "zgu/cyclotomic.hpp"
#include "zgu/perm.hpp"

namespace zgu {

/// Partial augmentations eps_x(u), one integer per conjugacy class (in the
/// ClassTable's canonical order). Missing trailing entries read as zero.
class PAVector {
public:
  PAVector() = default;
  explicit PAVector(std::size_t num_classes) : entries_(num_classes, 0) {}
  explicit PAVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  static PAVector delta(std::size_t num_classes, std::size_t c) {
    PAVector v(num_classes);
    v.entries_[c] = 1;
    return v;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t c) const { return c < entries_.size() ? entries_[c] : 0; }
  std::int64_t &at(std::size_t c) { return entries_.at(c); }
  const std::vector<std::int64_t> &entries() const noexcept { return entries_; }

  std::int64_t augmentation() const;
  std::vector<std::size_t> support() const;

  friend bool operator==(const PAVector &, const PAVector &) = default;
  friend auto operator<=>(const PAVector &a, const PAVector &b) { return a.entries_ <=> b.entries_; }

private:
  std::vector<std::int64_t> entries_;
};

/// Partial augmentations of u and its proper powers u^d (d | n, d < n).
struct TorsionUnitCandidate {
  long order = 1;
  std::map<long, PAVector> pav_by_divisor; ///< key 1 is u itself

  const PAVector &power(long d) const { return pav_by_divisor.at(d); }

  friend bool operator==(const TorsionUnitCandidate &, const TorsionUnitCandidate &) = default;
  friend auto operator<=>(const TorsionUnitCandidate &a, const TorsionUnitCandidate &b) {
    return a.pav_by_divisor <=> b.pav_by_divisor;
  }
};

/// The tower of a group element g of order n: u^d -> delta at the class of g^d.
TorsionUnitCandidate delta_tower(const ClassTable &classes, const Permutation &g);

/// Returns pav unchanged if every nonzero entry sits on a class whose element
/// order divides n; throws Error("SupportViolation") naming the offenders.
const PAVector &support_restrict(const PAVector &pav, const ClassTable &classes, long n);

enum class BHKind { Passed, Identified, Rejected };

struct BHVerdict {
  BHKind kind = BHKind::Passed;
  std::optional<std::size_t> central_class; ///< set for Identified and Rejected-at-center
};

/// If eps_z(u) != 0 at a central class z then u = z.
BHVerdict berman_higman(const PAVector &pav, const ClassTable &classes,
                        const std::vector<std::size_t> &center_classes);

struct CLVerdict {
  bool passed = true;
  long failing_q = 0;
};

/// For each prime power q | n, u^(n/q) must have a nonzero partial augmentation
/// on some class of element order exactly q.
CLVerdict cohn_livingstone(const TorsionUnitCandidate &candidate, const ClassTable &classes);

/// Partial augmentations of u^s from those of u (order n): eps_x(u^s) = eps_{x^t}(u)
/// with st = 1 mod n. Throws Error("NotCoprime").
PAVector galois_power(const PAVector &pav, const ClassTable &classes, long n, long s);

/// The same action applied to every power in a tower.
TorsionUnitCandidate galois_power(const TorsionUnitCandidate &candidate, const ClassTable &classes,
                                  long s);

/// Both sides of sum_{s in (Z/n)^x} eps_x(u^s) = sum_s eps_{x^s}(u), computed separately.
/// The identity holds for classes x whose order divides n.
std::pair<std::int64_t, std::int64_t> galois_sum(const PAVector &pav, const ClassTable &classes,
                                                 long n, std::size_t c);

/// Partial augmentations of u + u^2 + ... + u^(p-1) for u of order p, under the
/// hypothesis that all order-p classes are powers of x_class. Throws
/// Error("HypothesisViolated") if they are not, and Error("InconsistentCandidate")
/// if the sum differs from (p-1)/k on each of the k order-p classes.
PAVector order_p_sum(const PAVector &pav, const ClassTable &classes, long p, std::size_t x_class);

/// True if every class of element order p is the class of a power of x_class.
bool order_p_classes_are_powers(const ClassTable &classes, long p, std::size_t x_class);

/// chi(u) = sum_c eps_c(u) chi(c), with chi given in table column order.
Cyclotomic character_value(const PAVector &pav, const std::vector<Cyclotomic> &row,
                           const ClassMatching &matching);

} // namespace zgu
