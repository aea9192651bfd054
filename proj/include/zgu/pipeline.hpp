#pragma once

#include <optional>
#include <vector>

#include "zgu/context.hpp"
#include "zgu/help.hpp"
#include "zgu/report.hpp"

namespace zgu {

/// Summary of the admissible set of order n: Excluded when it is empty (and
/// complete), Identified when every solution is the tower of a group element,
/// NotExcluded otherwise. Each non-trivial solution gets one step per value of
/// the smallest rational character of degree > 1.
ObstructionReport help_report(const GroupContext &ctx, HelpSolver &solver, long n);

/// Row index of the rational character of least degree > 1, if any.
std::optional<std::size_t> smallest_rational_row(const CharacterTable &table);

/// The A7 walk-through: HeLP at orders 2 and 4, the abelian scan at order 8
/// and the quaternion restriction check.
std::vector<ObstructionReport> example_a7(const GroupContext &ctx, HelpSolver &solver);

} // namespace zgu
