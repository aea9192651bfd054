#include "zgu/help.hpp"

#include <algorithm>
#include <set>

#include "zgu/error.hpp"

namespace zgu {

bool MultiplicityVector::admissible() const {
  for (const auto &row : mu)
    for (const auto &m : row)
      if (!is_integral(m) || m < 0)
        return false;
  return true;
}

MultiplicityVector multiplicities(const TorsionUnitCandidate &candidate, const CharacterTable &table,
                                  const ClassMatching &matching) {
  const long n = candidate.order;
  MultiplicityVector out;
  out.order = n;
  out.mu.assign(table.num_rows(), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    // chi(u^d) for every d | n; u^n = 1
    std::map<long, Cyclotomic> chi_pow;
    for (long d : divisors(n))
      chi_pow[d] = d == n ? table.values[r][0]
                          : character_value(candidate.power(d), table.values[r], matching);
    for (long l = 0; l < n; ++l) {
      Rational sum;
      for (const auto &[d, v] : chi_pow) {
        const long m = n / d;
        sum += (v * Cyclotomic::zeta(m, -l)).trace_over(m);
      }
      sum /= Rational(n);
      out.mu[r][static_cast<std::size_t>(l)] = sum;
    }
  }
  return out;
}

HelpSolver::HelpSolver(const GroupContext &ctx, long box_bound) : ctx_(ctx), box_bound_(box_bound) {
  if (box_bound < 0)
    throw Error("InvalidArgument", "box bound must be non-negative");
}

const AdmissibleSet &HelpSolver::admissible(long n) {
  if (auto it = cache_.find(n); it != cache_.end())
    return it->second;
  AdmissibleSet s = solve(n);
  return cache_.emplace(n, std::move(s)).first->second;
}

namespace {

// Lower towers: a consistent choice of partial augmentations for every u^d,
// 1 < d < n, assembled from admissible towers of u^q for primes q | n.
std::vector<std::map<long, PAVector>> lower_towers(long n, const std::vector<long> &primes,
                                                   const std::vector<const AdmissibleSet *> &sets) {
  std::vector<std::map<long, PAVector>> out;
  std::map<long, PAVector> acc;
  std::vector<std::size_t> pick(sets.size(), 0);
  for (const auto *s : sets)
    if (s->candidates.empty())
      return out;
  while (true) {
    acc.clear();
    bool ok = true;
    for (std::size_t i = 0; i < sets.size() && ok; ++i) {
      const auto &t = sets[i]->candidates[pick[i]];
      for (const auto &[dd, pav] : t.pav_by_divisor) {
        const long d = primes[i] * dd;
        auto [it, inserted] = acc.emplace(d, pav);
        if (!inserted && it->second != pav)
          ok = false;
      }
    }
    if (ok) {
      for (long d : divisors(n))
        require(d == 1 || d == n || acc.count(d), "lower tower misses a divisor");
      out.push_back(acc);
    }
    std::size_t i = 0;
    for (; i < sets.size(); ++i) {
      if (++pick[i] < sets[i]->candidates.size())
        break;
      pick[i] = 0;
    }
    if (i == sets.size())
      break;
  }
  return out;
}

} // namespace

AdmissibleSet HelpSolver::solve(long n) {
  if (n < 1)
    throw Error("InvalidArgument", "order must be positive");
  const ClassTable &C = ctx_.classes;
  const CharacterTable &T = ctx_.table;
  const auto &M = ctx_.matching;
  AdmissibleSet out;
  out.order = n;
  out.box_bound = box_bound_;
  if (n == 1) {
    out.candidates.push_back({1, {}});
    return out;
  }
  // the order of a torsion unit divides |G|
  if (C.group_order() % static_cast<std::size_t>(n) != 0)
    return out;

  std::vector<long> primes;
  std::vector<const AdmissibleSet *> sets;
  for (long q : prime_factors(n)) {
    if (n / q == 1)
      continue;
    const AdmissibleSet &sub = admissible(n / q);
    if (!sub.complete)
      out.complete = false;
    primes.push_back(q);
    sets.push_back(&sub);
  }
  std::vector<std::map<long, PAVector>> lowers;
  if (primes.empty())
    lowers.emplace_back();
  else
    lowers = lower_towers(n, primes, sets);

  const std::size_t k = C.size();
  const std::size_t rows = T.num_rows();
  const auto center = C.central_classes();
  std::vector<bool> is_central(k, false);
  for (std::size_t z : center)
    is_central[z] = true;

  // Linearised multiplicities: n * mu_l = base[r][l] + sum_c eps_c * coef[r][l][c].
  std::vector<std::size_t> vars;
  for (std::size_t c = 0; c < k; ++c)
    if (n % C[c].element_order == 0 && !is_central[c])
      vars.push_back(c);
  std::vector<std::vector<std::vector<std::int64_t>>> coef(
      rows, std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(n),
                                                   std::vector<std::int64_t>(vars.size())));
  for (std::size_t r = 0; r < rows; ++r)
    for (long l = 0; l < n; ++l) {
      const Cyclotomic z = Cyclotomic::zeta(n, -l);
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const Cyclotomic &chi = T.values[r][M.column_of_class[vars[v]]];
        coef[r][static_cast<std::size_t>(l)][v] = to_int64((chi * z).trace_over(n));
      }
    }

  const long B = box_bound_;
  std::set<TorsionUnitCandidate> found;
  auto accept = [&](const std::map<long, PAVector> &lower, const PAVector &u) {
    TorsionUnitCandidate cand;
    cand.order = n;
    cand.pav_by_divisor = lower;
    cand.pav_by_divisor[1] = u;
    if (!cohn_livingstone(cand, C).passed)
      return;
    const auto bh = berman_higman(u, C, center);
    if (bh.kind == BHKind::Rejected)
      return;
    if (bh.kind == BHKind::Identified && C[*bh.central_class].element_order != n)
      return;
    // cross-check the linearised test against the exact cyclotomic route
    require(multiplicities(cand, T, M).admissible(), "linearised HeLP test disagrees with exact multiplicities");
    found.insert(std::move(cand));
  };

  for (const auto &lower : lowers) {
    std::vector<std::vector<std::int64_t>> base(rows, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (std::size_t r = 0; r < rows; ++r) {
      std::map<long, Cyclotomic> chi_pow;
      for (const auto &[d, pav] : lower)
        chi_pow[d] = character_value(pav, T.values[r], M);
      for (long l = 0; l < n; ++l) {
        Rational s = T.values[r][0].as_rational(); // d = n term
        for (const auto &[d, v] : chi_pow) {
          const long m = n / d;
          s += (v * Cyclotomic::zeta(m, -l)).trace_over(m);
        }
        base[r][static_cast<std::size_t>(l)] = to_int64(s);
      }
    }

    // central candidates u = z, handled outside the box (Berman-Higman)
    for (std::size_t z : center)
      if (C[z].element_order == n)
        accept(lower, PAVector::delta(k, z));

    if (vars.empty())
      continue;
    const std::size_t free_vars = vars.size() - 1;
    std::vector<std::int64_t> eps(vars.size(), -B);
    if (free_vars == 0)
      eps[0] = 1;
    while (true) {
      std::int64_t partial = 0;
      for (std::size_t v = 0; v < free_vars; ++v)
        partial += eps[v];
      const std::int64_t last = 1 - partial;
      if (last >= -B && last <= B) {
        eps[free_vars] = last;
        bool ok = true;
        for (std::size_t r = 0; r < rows && ok; ++r)
          for (long l = 0; l < n && ok; ++l) {
            const auto &cf = coef[r][static_cast<std::size_t>(l)];
            std::int64_t val = base[r][static_cast<std::size_t>(l)];
            for (std::size_t v = 0; v < vars.size(); ++v)
              val += eps[v] * cf[v];
            ok = val >= 0 && val % n == 0;
          }
        if (ok) {
          PAVector u(k);
          for (std::size_t v = 0; v < vars.size(); ++v)
            u.at(vars[v]) = eps[v];
          accept(lower, u);
        }
      }
      std::size_t v = 0;
      for (; v < free_vars; ++v) {
        if (++eps[v] <= B)
          break;
        eps[v] = -B;
      }
      if (v == free_vars)
        break;
    }
  }

  out.candidates.assign(found.begin(), found.end());
  for (const auto &cand : out.candidates)
    for (auto e : cand.power(1).entries())
      if (e == B || e == -B)
        out.complete = false;

  for (const auto &cand : out.candidates) {
    for (long s = 2; s < n && out.galois_closed; ++s) {
      if (gcd_l(s, n) != 1)
        continue;
      if (!found.count(galois_power(cand, C, s)))
        out.galois_closed = false;
    }
  }
  return out;
}

AdmissibleSet enumerate_admissible(const GroupContext &ctx, long n, long box_bound) {
  HelpSolver solver(ctx, box_bound);
  return solver.admissible(n);
}

} // namespace zgu
