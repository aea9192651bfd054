#pragma once

#include <map>
#include <vector>

#include "zgu/context.hpp"
#include "zgu/pa.hpp"

namespace zgu {

/// mu_l(u, chi) for every table row and every residue l mod n.
struct MultiplicityVector {
  long order = 1;
  std::vector<std::vector<Rational>> mu; ///< [row][l]

  /// Every entry a non-negative integer.
  bool admissible() const;
};

/// mu_l(u, chi) = (1/n) sum_{d | n} Tr_{Q(zeta_{n/d})/Q}(chi(u^d) zeta_{n/d}^{-l}),
/// evaluated with exact cyclotomic arithmetic.
MultiplicityVector multiplicities(const TorsionUnitCandidate &candidate, const CharacterTable &table,
                                  const ClassMatching &matching);

struct AdmissibleSet {
  long order = 1;
  long box_bound = 0;
  std::vector<TorsionUnitCandidate> candidates;
  bool galois_closed = true;
  /// False when some solution touches the box boundary (BoxTooSmall).
  bool complete = true;
};

inline constexpr long kDefaultBoxBound = 10;

/// Enumerates admissible towers bottom-up over the divisors of n and caches
/// every order it has solved.
class HelpSolver {
public:
  HelpSolver(const GroupContext &ctx, long box_bound = kDefaultBoxBound);

  const AdmissibleSet &admissible(long n);
  long box_bound() const noexcept { return box_bound_; }

private:
  AdmissibleSet solve(long n);

  const GroupContext &ctx_;
  long box_bound_;
  std::map<long, AdmissibleSet> cache_;
};

AdmissibleSet enumerate_admissible(const GroupContext &ctx, long n, long box_bound = kDefaultBoxBound);

} // namespace zgu
