#pragma once

// Property checks shared by the doctest suite and the acceptance binary. Each
// returns an empty string on success, otherwise the first counterexample.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "zgu/help.hpp"
#include "zgu/obstructions.hpp"
#include "zgu/pa.hpp"

namespace properties {

// Every element's tower is HeLP-admissible. Orders that no element has are
// vacuous and skipped.
inline std::string help_soundness(const zgu::GroupContext &ctx) {
  const auto &C = ctx.classes;
  zgu::HelpSolver solver(ctx);
  std::set<long> orders;
  for (const auto &cl : C.classes())
    orders.insert(cl.element_order);
  for (long n : zgu::divisors(C.exponent())) {
    if (!orders.count(n))
      continue;
    const auto &set = solver.admissible(n);
    for (const auto &cl : C.classes()) {
      if (cl.element_order != n)
        continue;
      const auto tower = zgu::delta_tower(C, cl.representative);
      bool found = false;
      for (const auto &cand : set.candidates)
        found = found || cand == tower;
      if (!found)
        return "tower of " + cl.name + " missing from the admissible set of order " + std::to_string(n);
    }
  }
  return {};
}

// chi(u^s) = sigma_s(chi(u)) on random PA vectors.
inline std::string galois_equivariance(const zgu::GroupContext &ctx, std::mt19937 &rng, int samples) {
  const auto &C = ctx.classes;
  const long e = C.exponent();
  std::vector<long> units;
  for (long s = 1; s < e || s == 1; ++s)
    if (zgu::gcd_l(s, e) == 1)
      units.push_back(s);
  const auto ns = zgu::divisors(e);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int it = 0; it < samples; ++it) {
    const long n = ns[std::uniform_int_distribution<std::size_t>(0, ns.size() - 1)(rng)];
    const long s = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
    zgu::PAVector pav(C.size());
    for (std::size_t c = 0; c < C.size(); ++c)
      if (n % C[c].element_order == 0)
        pav.at(c) = entry(rng);
    const auto image = zgu::galois_power(pav, C, n, s);
    for (std::size_t r = 0; r < ctx.table.num_rows(); ++r) {
      const auto lhs = zgu::character_value(image, ctx.table.values[r], ctx.matching);
      const auto rhs = zgu::character_value(pav, ctx.table.values[r], ctx.matching).galois(s);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "row " << r + 1 << ", n = " << n << ", s = " << s << ": " << lhs.to_string()
           << " != " << rhs.to_string();
        return os.str();
      }
    }
  }
  return {};
}

struct SylowCase {
  std::string name;
  zgu::PermGroup group;
  long p;
};

inline zgu::PermGroup dihedral(int n) {
  std::vector<int> r(n), f(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    f[i] = (n - i) % n;
  }
  return zgu::PermGroup::enumerate({zgu::Permutation::from_images(r), zgu::Permutation::from_images(f)}, n);
}

// x -> a x + b on Z/q with a ranging over the subgroup of order k of (Z/q)^x
inline zgu::PermGroup affine(int q, int k) {
  int g = 2;
  for (;; ++g) {
    long o = 1, v = g % q;
    while (v != 1) {
      v = v * g % q;
      ++o;
    }
    if (o == q - 1)
      break;
  }
  long a = 1;
  for (int i = 0; i < (q - 1) / k; ++i)
    a = a * g % q;
  std::vector<int> t(q), m(q);
  for (int i = 0; i < q; ++i) {
    t[i] = (i + 1) % q;
    m[i] = static_cast<int>(a * i % q);
  }
  return zgu::PermGroup::enumerate({zgu::Permutation::from_images(t), zgu::Permutation::from_images(m)}, q);
}

inline zgu::PermGroup symmetric(int n) {
  std::vector<int> c(n), t(n);
  for (int i = 0; i < n; ++i) {
    c[i] = (i + 1) % n;
    t[i] = i;
  }
  std::swap(t[0], t[1]);
  return zgu::PermGroup::enumerate({zgu::Permutation::from_images(c), zgu::Permutation::from_images(t)}, n);
}

inline zgu::PermGroup alternating(int n) {
  std::vector<zgu::Permutation> gens;
  for (int i = 2; i < n; ++i)
    gens.push_back(fixtures::perm(n, {{0, 1, i}}));
  return zgu::PermGroup::enumerate(gens, n);
}

// Small groups with a cyclic Sylow p-subgroup, p | |G|.
inline std::vector<SylowCase> cyclic_sylow_pool() {
  std::vector<SylowCase> pool;
  for (int n : {3, 5, 6, 7, 9, 10, 12, 15})
    for (long p : zgu::prime_factors(n))
      pool.push_back({"C" + std::to_string(n), fixtures::cyclic(n), p});
  for (int n : {3, 5, 7, 9, 11})
    for (long p : zgu::prime_factors(2L * n))
      pool.push_back({"D" + std::to_string(2 * n), dihedral(n), p});
  for (auto [q, k] : {std::pair{5, 4}, {7, 3}, {7, 6}, {11, 5}, {11, 10}, {13, 3}, {13, 4}, {13, 6}})
    for (long p : zgu::prime_factors(static_cast<long>(q) * k))
      pool.push_back({"AGL" + std::to_string(q) + "_" + std::to_string(k), affine(q, k), p});
  pool.push_back({"A4", alternating(4), 3});
  pool.push_back({"S4", symmetric(4), 3});
  pool.push_back({"A5", alternating(5), 3});
  pool.push_back({"A5", alternating(5), 5});
  pool.push_back({"S5", symmetric(5), 5});
  pool.push_back({"S5", symmetric(5), 3});
  return pool;
}

inline std::vector<SylowCase> random_sylow_cases(std::mt19937 &rng, std::size_t count) {
  auto pool = cyclic_sylow_pool();
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  return pool;
}

// |N:P| prime to p and a non-integral rank difference.
inline std::string theorem_a_invariant(const SylowCase &c) {
  const auto rep = zgu::theorem_a_check(zgu::ClassTable(c.group), c.p);
  const std::string tag = c.name + " (p = " + std::to_string(c.p) + ")";
  if (rep.verdict != zgu::Verdict::Excluded)
    return tag + ": verdict " + zgu::to_string(rep.verdict);
  const zgu::CertificateStep *np = nullptr, *diff = nullptr;
  for (const auto &s : rep.certificate) {
    if (s.description.rfind("|N:P|", 0) == 0 && s.formula == "value")
      np = &s;
    if (s.formula == "rank_difference")
      diff = &s;
  }
  if (!np || !diff)
    return tag + ": certificate lacks |N:P| or the rank difference";
  if (np->value.get_num() % c.p == 0)
    return tag + ": p divides |N:P|";
  if (diff->integral || diff->value.get_den() == 1)
    return tag + ": rank difference " + diff->value.get_str() + " is integral";
  if (!zgu::replay(rep))
    return tag + ": certificate does not replay";
  return {};
}

} // namespace properties
