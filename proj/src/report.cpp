#include "zgu/report.hpp"

#include "zgu/error.hpp"

namespace zgu {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Excluded:
    return "Excluded";
  case Verdict::NotExcluded:
    return "NotExcluded";
  case Verdict::Inapplicable:
    return "Inapplicable";
  case Verdict::Identified:
    return "Identified";
  }
  return "?";
}

Verdict parse_verdict(const std::string &s) {
  for (auto v : {Verdict::Excluded, Verdict::NotExcluded, Verdict::Inapplicable, Verdict::Identified})
    if (to_string(v) == s)
      return v;
  throw Error("ParseError", "unknown verdict '" + s + "'");
}

CertificateStep CertificateStep::make(std::string description, std::string formula,
                                      std::vector<Rational> inputs) {
  CertificateStep s;
  s.value = evaluate_formula(formula, inputs);
  s.integral = is_integral(s.value);
  s.description = std::move(description);
  s.formula = std::move(formula);
  s.inputs = std::move(inputs);
  return s;
}

const CertificateStep *ObstructionReport::witness() const {
  for (const auto &s : certificate)
    if (!s.integral)
      return &s;
  return nullptr;
}

Rational evaluate_formula(const std::string &f, const std::vector<Rational> &in) {
  auto need = [&](std::size_t n) {
    if (in.size() != n)
      throw Error("BadInputs", f + " expects " + std::to_string(n) + " inputs, got " +
                                   std::to_string(in.size()));
  };
  if (f == "value") {
    need(1);
    return in[0];
  }
  if (f == "ratio") {
    need(2);
    if (in[1] == 0)
      throw Error("BadInputs", "ratio with zero denominator");
    return in[0] / in[1];
  }
  if (f == "difference") {
    need(2);
    return in[0] - in[1];
  }
  if (f == "p2_rank") {
    need(3);
    const Rational &p = in[0];
    return (in[1] + (p + 1) * in[2]) / (p * p);
  }
  if (f == "closed_principal") {
    need(3);
    const Rational &p = in[0];
    return (in[1] + in[2] * (p * p - 1)) / (p * p);
  }
  if (f == "closed_faithful") {
    need(3);
    const Rational &p = in[0];
    return (in[1] - in[2] * (p + 1)) / (p * p);
  }
  if (f == "rank_difference") {
    need(2);
    return in[1] * (in[0] + 1) / in[0];
  }
  if (f == "idempotent_rank") {
    need(2);
    return in[1] / in[0];
  }
  if (f == "restriction_mult") {
    need(5);
    return (in[1] * in[2] + in[3] * in[4]) / in[0];
  }
  if (f == "linear_part") {
    need(3);
    return in[0] - in[1] * in[2];
  }
  throw Error("UnknownFormula", "'" + f + "'");
}

bool replay(const ObstructionReport &report) {
  for (const auto &s : report.certificate) {
    const Rational v = evaluate_formula(s.formula, s.inputs);
    if (v != s.value || is_integral(v) != s.integral)
      return false;
  }
  return true;
}

} // namespace zgu
