#pragma once

#include <string>
#include <vector>

#include "zgu/rational.hpp"

namespace zgu {

enum class Verdict { Excluded, NotExcluded, Inapplicable, Identified };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string &s);

/// One exact arithmetic step. `value` is recomputable as
/// evaluate_formula(formula, inputs).
struct CertificateStep {
  std::string description;
  Rational value;
  bool integral = true;
  std::string formula; ///< see evaluate_formula
  std::vector<Rational> inputs;

  static CertificateStep make(std::string description, std::string formula,
                              std::vector<Rational> inputs);
};

struct ObstructionReport {
  std::string title;
  Verdict verdict = Verdict::Inapplicable;
  std::vector<CertificateStep> certificate;
  std::vector<std::string> hypotheses;
  std::string conclusion;

  /// First non-integral step, if any.
  const CertificateStep *witness() const;
};

/// Formulas understood by certificates:
///   value            [v]                     v
///   ratio            [a, b]                  a / b
///   difference       [a, b]                  a - b
///   p2_rank          [p, chi1, S]            (chi1 + (p+1) S) / p^2
///   closed_principal [p, |G:P|, |N:P|]       (|G:P| + |N:P|(p^2-1)) / p^2
///   closed_faithful  [p, |G:P|, |N:P|]       (|G:P| - |N:P|(p+1)) / p^2
///   rank_difference  [p, |N:P|]              |N:P|(p+1) / p
///   idempotent_rank  [m, total]              total / m
///   restriction_mult [|Q|, chi1, psi1, z, psi_z]  (chi1 psi1 + z psi_z) / |Q|
///   linear_part      [chi1, psi1, k]         chi1 - psi1 k
/// Throws Error("UnknownFormula") or Error("BadInputs").
Rational evaluate_formula(const std::string &formula, const std::vector<Rational> &inputs);

/// Recomputes every step from its inputs and compares bit-exactly.
bool replay(const ObstructionReport &report);

} // namespace zgu
