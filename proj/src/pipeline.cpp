#include "zgu/pipeline.hpp"

#include <sstream>

#include "zgu/error.hpp"
#include "zgu/obstructions.hpp"

namespace zgu {

std::optional<std::size_t> smallest_rational_row(const CharacterTable &table) {
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < table.num_rows(); ++r)
    if (table.row_is_rational(r) && table.degree(r) > 1 &&
        (!best || table.degree(r) < table.degree(*best)))
      best = r;
  return best;
}

namespace {

bool is_group_element(const TorsionUnitCandidate &cand, const ClassTable &C) {
  const auto support = cand.power(1).support();
  if (support.size() != 1 || cand.power(1)[support[0]] != 1)
    return false;
  const auto &cls = C[support[0]];
  return cls.element_order == cand.order && delta_tower(C, cls.representative) == cand;
}

std::string describe(const PAVector &pav, const ClassTable &C) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t c : pav.support()) {
    os << (first ? "" : ", ") << C[c].name << ": " << pav[c];
    first = false;
  }
  os << "}";
  return os.str();
}

} // namespace

ObstructionReport help_report(const GroupContext &ctx, HelpSolver &solver, long n) {
  const ClassTable &C = ctx.classes;
  const AdmissibleSet &set = solver.admissible(n);
  ObstructionReport rep;
  rep.title = "torsion units of order " + std::to_string(n);
  rep.hypotheses.push_back("HeLP constraints from every ordinary character, partial augmentations in [-" +
                           std::to_string(set.box_bound) + ", " + std::to_string(set.box_bound) + "]");
  rep.hypotheses.push_back(set.complete ? "no solution touches the box boundary"
                                        : "some solution touches the box boundary; the set may be incomplete");
  rep.certificate.push_back(CertificateStep::make("admissible partial augmentation towers", "value",
                                                  {Rational(static_cast<long>(set.candidates.size()))}));
  if (set.candidates.empty()) {
    rep.verdict = set.complete ? Verdict::Excluded : Verdict::NotExcluded;
    rep.conclusion = set.complete ? "V(ZG) has no torsion units of order " + std::to_string(n)
                                  : "no solution inside the box";
    return rep;
  }
  const auto row = smallest_rational_row(ctx.table);
  bool all_trivial = true;
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const auto &cand = set.candidates[i];
    const bool trivial = is_group_element(cand, C);
    all_trivial = all_trivial && trivial;
    std::string head = "solution #" + std::to_string(i + 1) + " u = " + describe(cand.power(1), C);
    if (trivial)
      head += " (tower of a group element)";
    if (!row) {
      rep.certificate.push_back(CertificateStep::make(head, "value", {Rational(cand.order)}));
      continue;
    }
    const auto value = character_value(cand.power(1), ctx.table.values[*row], ctx.matching).as_rational();
    rep.certificate.push_back(
        CertificateStep::make(head + ": chi_" + std::to_string(*row + 1) + "(u)", "value", {value}));
    if (trivial)
      continue;
    const auto mv = multiplicities(cand, ctx.table, ctx.matching);
    for (long l = 0; l < n; ++l)
      rep.certificate.push_back(CertificateStep::make(
          head + ": mu_" + std::to_string(l) + "(u, chi_" + std::to_string(*row + 1) + ")", "value",
          {mv.mu[*row][static_cast<std::size_t>(l)]}));
  }
  if (all_trivial) {
    rep.verdict = Verdict::Identified;
    rep.conclusion = "every admissible solution has the partial augmentations of an element of G";
  } else {
    rep.verdict = Verdict::NotExcluded;
    rep.conclusion = "HeLP admits partial augmentations not realised by elements of G";
  }
  return rep;
}

std::vector<ObstructionReport> example_a7(const GroupContext &ctx, HelpSolver &solver) {
  std::vector<ObstructionReport> out;
  out.push_back(help_report(ctx, solver, 2));
  out.push_back(help_report(ctx, solver, 4));
  out.push_back(abelian_idempotent_scan(ctx, 8, solver));
  out.push_back(quaternion_subgroup_check(ctx, solver));
  return out;
}

} // namespace zgu
