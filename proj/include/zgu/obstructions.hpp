#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "zgu/context.hpp"
#include "zgu/help.hpp"
#include "zgu/report.hpp"

namespace zgu {

/// chi(e) for e = (1/p^2) sum_{u in U}, U elementary abelian of order p^2, given
/// values = {chi(1), chi(x), ..., chi(x^(p-1))}:
/// (chi(1) + (p+1) sum_i chi(x^i)) / p^2. Throws Error("NotRational").
Rational elementary_abelian_rank(std::span<const Cyclotomic> values, long p);

/// Non-integral rank difference excluding an elementary abelian p^2 subgroup
/// of V(ZG) when Sylow p-subgroups of G are cyclic.
ObstructionReport theorem_a_check(const ClassTable &classes, long p);

/// Klein four subgroups of V(ZG): unique involution, Cohn-Livingstone,
/// Berman-Higman.
ObstructionReport klein_four_check(const PermGroup &group);

/// Elementary divisors of every abelian group of order m, e.g. 8 -> {8}, {4,2}, {2,2,2}.
std::vector<std::vector<long>> abelian_types(long m);
std::string abelian_type_name(const std::vector<long> &type);
/// Number of elements of each order d in the abelian group with the given
/// elementary divisors.
std::map<long, long> abelian_order_counts(const std::vector<long> &type);

/// Rational-valued class functions used for idempotent integrality: the
/// rational rows and the Galois-orbit sums of the remaining rows.
struct RationalCharacter {
  std::string label;
  std::vector<Rational> values; ///< class order
};
std::vector<RationalCharacter> rational_characters(const GroupContext &ctx);

/// Idempotent-rank scan over every abelian group type of order m, with
/// character values drawn from the admissible HeLP sets.
ObstructionReport abelian_idempotent_scan(const GroupContext &ctx, long m, HelpSolver &solver);

/// Restriction of a rational character to a hypothetical quaternion subgroup
/// U with involution value z_value = chi(z). `quaternion` is the table of U.
/// Throws Error("NonIntegralDecomposition").
ObstructionReport quaternion_restriction_check(bool chi_is_rational, const Rational &chi_degree,
                                               const Rational &z_value,
                                               const CharacterTable &quaternion);

/// Runs quaternion_restriction_check with every rational row and every
/// admissible value of chi at a torsion unit of order 2.
ObstructionReport quaternion_subgroup_check(const GroupContext &ctx, HelpSolver &solver);

/// Combines the checks above into a statement about all finite p-subgroups.
ObstructionReport classify_finite_p_subgroups(const ClassTable &classes, long p);

} // namespace zgu
