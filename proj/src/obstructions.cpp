#include "zgu/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "zgu/error.hpp"

namespace zgu {

namespace {

Rational q(long v) { return Rational(v); }
Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::string frac(const Rational &num, long den) {
  return num.get_str() + "/" + std::to_string(den);
}

} // namespace

Rational elementary_abelian_rank(std::span<const Cyclotomic> values, long p) {
  if (values.size() != static_cast<std::size_t>(p))
    throw Error("BadInputs", "expected chi(1), chi(x), ..., chi(x^(p-1))");
  Cyclotomic sum;
  for (std::size_t i = 1; i < values.size(); ++i)
    sum += values[i];
  return evaluate_formula("p2_rank", {q(p), values[0].as_rational(), sum.as_rational()});
}

// ---------------------------------------------------------------------------

ObstructionReport theorem_a_check(const ClassTable &classes, long p) {
  if (!is_prime(p))
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  const PermGroup &g = classes.group();
  ObstructionReport rep;
  rep.title = "elementary abelian subgroups of order " + std::to_string(p * p) + " in V(ZG)";
  const SylowInfo info = sylow_analysis(g, p);
  rep.certificate.push_back(CertificateStep::make("order of a Sylow " + std::to_string(p) + "-subgroup",
                                                  "value", {q(info.sylow_order)}));
  if (info.sylow_order == 1) {
    rep.verdict = Verdict::Excluded;
    rep.hypotheses.push_back("the order of a finite subgroup of V(ZG) divides |G|");
    rep.certificate.push_back(CertificateStep::make("|G| / p^2", "ratio", {q(g.order()), q(p * p)}));
    rep.conclusion = std::to_string(p) + " does not divide |G|";
    return rep;
  }
  if (!info.is_cyclic) {
    rep.verdict = Verdict::Inapplicable;
    rep.hypotheses.push_back("Sylow " + std::to_string(p) + "-subgroups of G are not cyclic");
    rep.conclusion = "G itself contains a noncyclic subgroup of order " + std::to_string(p * p);
    return rep;
  }
  rep.hypotheses.push_back("Sylow " + std::to_string(p) + "-subgroups of G are cyclic");
  rep.hypotheses.push_back("V(ZG) contains an elementary abelian subgroup U of order " +
                           std::to_string(p * p) + " (to be refuted)");

  // P = <y> cyclic Sylow, x of order p in P
  const Permutation *y = nullptr;
  for (const auto &e : g.elements())
    if (static_cast<std::size_t>(e.order()) == info.sylow_order) {
      y = &e;
      break;
    }
  require(y != nullptr, "cyclic Sylow subgroup without generator");
  const long order_p = static_cast<long>(info.sylow_order);
  const Permutation x = y->pow(order_p / p);
  const PermGroup n = normalizer_of_cyclic(g, x);
  require(n.contains(*y), "normalizer of <x> does not contain the cyclic Sylow subgroup");
  const long index_gp = static_cast<long>(g.order()) / order_p;
  const long index_np = static_cast<long>(n.order()) / order_p;
  require(static_cast<long>(n.order()) % order_p == 0, "|P| does not divide |N|");
  require(index_np % p != 0, "p divides |N:P|");

  const std::size_t x_class = classes.class_of(x);
  require(order_p_classes_are_powers(classes, p, x_class),
          "elements of order p are not all conjugate to powers of x");
  rep.hypotheses.push_back("every element of order " + std::to_string(p) +
                           " is conjugate to a power of x = " + x.to_cycle_string());

  rep.certificate.push_back(CertificateStep::make("|G:P|", "value", {q(index_gp)}));
  rep.certificate.push_back(CertificateStep::make("|N:P| with N = N_G(<x>)", "value", {q(index_np)}));
  const auto principal = CertificateStep::make(
      "rank of e in the character induced from the principal character of P: (|G:P| + |N:P|(p^2-1))/p^2",
      "closed_principal", {q(p), q(index_gp), q(index_np)});
  const auto faithful = CertificateStep::make(
      "rank of e in the character induced from a faithful character of P: (|G:P| - |N:P|(p+1))/p^2",
      "closed_faithful", {q(p), q(index_gp), q(index_np)});
  rep.certificate.push_back(principal);
  rep.certificate.push_back(faithful);

  // brute-force induction and the idempotent formula must reproduce both
  auto rank_of = [&](long j) {
    const auto ind = induce_from_cyclic(classes, *y, j);
    std::vector<Cyclotomic> vals{ind[0]};
    for (long i = 1; i < p; ++i)
      vals.push_back(ind[classes.class_of(x.pow(i))]);
    Cyclotomic s;
    for (long i = 1; i < p; ++i)
      s += vals[static_cast<std::size_t>(i)];
    return std::pair{elementary_abelian_rank(vals, p), s.as_rational()};
  };
  const auto [rank0, sum0] = rank_of(0);
  require(rank0 == principal.value, "induced principal rank differs from closed form");
  rep.certificate.push_back(CertificateStep::make(
      "same rank via chi(e) = (chi(1) + (p+1) sum_i chi(x^i))/p^2 on the induced principal character",
      "p2_rank", {q(p), q(index_gp), sum0}));
  bool first = true;
  for (long j = 1; j < order_p; ++j) {
    if (gcd_l(j, order_p) != 1)
      continue;
    const auto [rank_j, sum_j] = rank_of(j);
    require(rank_j == faithful.value, "induced faithful rank differs from closed form (j = " +
                                          std::to_string(j) + ")");
    if (first)
      rep.certificate.push_back(CertificateStep::make(
          "same rank via the idempotent formula on the induced faithful character (every faithful choice agrees)",
          "p2_rank", {q(p), q(index_gp), sum_j}));
    first = false;
  }
  const auto diff = CertificateStep::make("difference of the two ranks", "difference",
                                          {principal.value, faithful.value});
  const auto closed_diff =
      CertificateStep::make("|N:P|(p+1)/p", "rank_difference", {q(p), q(index_np)});
  require(diff.value == closed_diff.value, "rank difference mismatch");
  require(!closed_diff.integral, "rank difference is integral");
  rep.certificate.push_back(diff);
  rep.certificate.push_back(closed_diff);
  rep.verdict = Verdict::Excluded;
  rep.conclusion = "the difference of two idempotent ranks is not an integer; V(ZG) has no "
                   "elementary abelian subgroup of order " +
                   std::to_string(p * p);
  return rep;
}

// ---------------------------------------------------------------------------

ObstructionReport klein_four_check(const PermGroup &group) {
  ObstructionReport rep;
  rep.title = "Klein four subgroups of V(ZG)";
  const SylowInfo info = sylow_analysis(group, 2);
  rep.certificate.push_back(CertificateStep::make("involutions in G", "value", {q(info.involution_count)}));
  if (info.has_klein_four) {
    rep.verdict = Verdict::Identified;
    rep.hypotheses.push_back("G contains two distinct commuting involutions");
    rep.conclusion = "G contains a Klein four group; nothing to exclude";
    return rep;
  }
  if (info.involution_count == 0) {
    rep.verdict = Verdict::Excluded;
    rep.hypotheses.push_back("the order of a finite subgroup of V(ZG) divides |G|");
    rep.certificate.push_back(CertificateStep::make("|G| / 4", "ratio", {q(group.order()), q(4L)}));
    rep.conclusion = "|G| is odd, so V(ZG) has no subgroup of order 4";
    return rep;
  }

  PermGroup reduced = group;
  const long two[] = {2};
  const QuotientResult first = o_pi_prime_quotient(group, two);
  rep.certificate.push_back(CertificateStep::make("|O_2'(G)|", "value", {q(first.kernel.order())}));
  if (first.kernel.order() > 1) {
    reduced = first.quotient;
    rep.hypotheses.push_back("passed to G/O_2'(G) of order " + std::to_string(reduced.order()) +
                             "; a 2-subgroup of V(ZG) maps isomorphically into V(Z[G/O_2'(G)])");
    const QuotientResult again = o_pi_prime_quotient(reduced, two);
    require(again.kernel.order() == 1, "O_2' of the quotient is not trivial");
  } else {
    rep.hypotheses.push_back("O_2'(G) = 1");
  }
  const SylowInfo red = sylow_analysis(reduced, 2);
  require(!red.has_klein_four, "quotient by O_2'(G) acquired a Klein four group");
  require(red.is_cyclic || red.is_generalized_quaternion,
          "Sylow 2-subgroup without Klein four is neither cyclic nor generalized quaternion");
  rep.hypotheses.push_back(red.is_cyclic ? "Sylow 2-subgroups are cyclic"
                                         : "Sylow 2-subgroups are generalized quaternion");
  rep.certificate.push_back(CertificateStep::make("order of a Sylow 2-subgroup", "value", {q(red.sylow_order)}));
  rep.certificate.push_back(
      CertificateStep::make("involutions in the reduced group", "value", {q(red.involution_count)}));
  require(red.involution_count == 1, "reduced group does not have a unique involution");
  const ClassTable rc(reduced);
  std::size_t z_class = 0;
  for (std::size_t c = 0; c < rc.size(); ++c)
    if (rc[c].element_order == 2)
      z_class = c;
  require(rc[z_class].size == 1, "the unique involution is not central");
  rep.certificate.push_back(
      CertificateStep::make("size of the class of the unique involution z", "value", {q(rc[z_class].size)}));
  rep.hypotheses.push_back("Cohn-Livingstone: an involution u of V(ZG) has eps_z(u) != 0");
  rep.hypotheses.push_back("Berman-Higman: eps_z(u) != 0 with z central forces u = z");
  rep.certificate.push_back(
      CertificateStep::make("involutions in V(ZG) (all equal z)", "value", {q(1L)}));
  rep.verdict = Verdict::Excluded;
  rep.conclusion = "z is the only involution of V(ZG), so V(ZG) has no Klein four subgroup";
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void partitions(long n, long max_part, std::vector<long> &cur, std::vector<std::vector<long>> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<long>> abelian_types(long m) {
  if (m < 1)
    throw Error("UnsupportedOrder", "order must be positive");
  std::vector<std::vector<long>> out{{}};
  for (long p : prime_factors(m)) {
    long e = 0;
    for (long r = m; r % p == 0; r /= p)
      ++e;
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<long>> next;
    for (const auto &t : out)
      for (const auto &part : parts) {
        auto u = t;
        for (long k : part) {
          long pk = 1;
          for (long i = 0; i < k; ++i)
            pk *= p;
          u.push_back(pk);
        }
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::string abelian_type_name(const std::vector<long> &type) {
  if (type.empty())
    return "C1";
  std::string s;
  for (long a : type)
    s += (s.empty() ? "C" : "xC") + std::to_string(a);
  return s;
}

std::map<long, long> abelian_order_counts(const std::vector<long> &type) {
  long exp = 1;
  for (long a : type)
    exp = lcm_l(exp, a);
  std::map<long, long> at_most; // #{u : u^d = 1}
  for (long d : divisors(exp)) {
    long n = 1;
    for (long a : type)
      n *= gcd_l(d, a);
    at_most[d] = n;
  }
  std::map<long, long> exact;
  for (long d : divisors(exp)) {
    long n = 0;
    for (long e : divisors(d))
      n += mobius(d / e) * at_most[e];
    if (n)
      exact[d] = n;
  }
  return exact;
}

std::vector<RationalCharacter> rational_characters(const GroupContext &ctx) {
  const auto &t = ctx.table;
  std::vector<RationalCharacter> out;
  std::vector<bool> done(t.num_rows(), false);
  long conductor = 1;
  for (const auto &row : t.values)
    for (const auto &v : row)
      conductor = lcm_l(conductor, v.conductor());
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    if (done[r])
      continue;
    done[r] = true;
    std::vector<Cyclotomic> sum = ctx.row(r);
    std::string label = "chi_" + std::to_string(r + 1);
    if (!t.row_is_rational(r)) {
      // add the remaining Galois conjugates of row r
      std::set<std::size_t> orbit{r};
      for (long s = 2; s < conductor; ++s) {
        if (gcd_l(s, conductor) != 1)
          continue;
        std::vector<Cyclotomic> img;
        for (const auto &v : t.values[r])
          img.push_back(v.galois(s));
        for (std::size_t o = 0; o < t.num_rows(); ++o)
          if (!orbit.count(o) && t.values[o] == img) {
            orbit.insert(o);
            done[o] = true;
            const auto row = ctx.row(o);
            for (std::size_t c = 0; c < sum.size(); ++c)
              sum[c] += row[c];
            label += "+chi_" + std::to_string(o + 1);
          }
      }
    }
    RationalCharacter rc;
    rc.label = label;
    for (const auto &v : sum)
      rc.values.push_back(v.as_rational());
    out.push_back(std::move(rc));
  }
  return out;
}

namespace {

// An abelian group Z/a_1 x ... x Z/a_k with elements in mixed radix.
struct AbelianModel {
  std::vector<long> type;
  long order = 1;
  long exponent = 1;
  std::vector<std::vector<long>> elements; // elements[0] = identity
  std::vector<long> element_order;
  std::vector<std::size_t> subgroup_of; // cyclic subgroup id per element (identity: none)
  std::vector<long> subgroup_order;
  std::vector<std::vector<std::size_t>> subgroup_generators;

  explicit AbelianModel(std::vector<long> t) : type(std::move(t)) {
    for (long a : type) {
      order *= a;
      exponent = lcm_l(exponent, a);
    }
    for (long i = 0; i < order; ++i) {
      std::vector<long> u;
      long r = i;
      for (long a : type) {
        u.push_back(r % a);
        r /= a;
      }
      long o = 1;
      for (std::size_t k = 0; k < type.size(); ++k)
        o = lcm_l(o, type[k] / gcd_l(type[k], u[k]));
      elements.push_back(std::move(u));
      element_order.push_back(o);
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    subgroup_of.assign(elements.size(), none);
    for (std::size_t i = 1; i < elements.size(); ++i) {
      if (subgroup_of[i] != none)
        continue;
      const std::size_t id = subgroup_order.size();
      subgroup_order.push_back(element_order[i]);
      subgroup_generators.emplace_back();
      for (long s = 1; s < element_order[i]; ++s) {
        if (gcd_l(s, element_order[i]) != 1)
          continue;
        const std::size_t j = index_of_multiple(i, s);
        subgroup_of[j] = id;
        subgroup_generators[id].push_back(j);
      }
    }
  }

  std::size_t index_of_multiple(std::size_t i, long s) const {
    std::size_t idx = 0;
    std::size_t radix = 1;
    for (std::size_t k = 0; k < type.size(); ++k) {
      idx += radix * static_cast<std::size_t>(mod_l(elements[i][k] * s, type[k]));
      radix *= static_cast<std::size_t>(type[k]);
    }
    return idx;
  }

  // sum over the generators u of subgroup S of conj(lambda(u)), lambda = elements[l]
  Rational dual_sum(std::size_t l, std::size_t S) const {
    std::map<long, Rational> raw;
    for (std::size_t u : subgroup_generators[S]) {
      long e = 0;
      for (std::size_t k = 0; k < type.size(); ++k)
        e += elements[l][k] * elements[u][k] * (exponent / type[k]);
      raw[mod_l(-e, exponent)] += 1;
    }
    const Cyclotomic c = Cyclotomic::normalize(exponent, raw);
    require(c.is_rational(), "orbit sum of a linear character is not rational");
    return c.as_rational();
  }

  std::string lambda_name(std::size_t l) const {
    std::string s = "(";
    for (std::size_t k = 0; k < type.size(); ++k)
      s += (k ? "," : "") + std::to_string(elements[l][k]);
    return s + ")";
  }
};

} // namespace

ObstructionReport abelian_idempotent_scan(const GroupContext &ctx, long m, HelpSolver &solver) {
  if (m < 1 || m > 64)
    throw Error("UnsupportedOrder", "abelian scan supports subgroup orders 1..64");
  const ClassTable &C = ctx.classes;
  ObstructionReport rep;
  rep.title = "abelian subgroups of order " + std::to_string(m) + " in V(ZG)";
  rep.hypotheses.push_back("the order of a finite subgroup of V(ZG) divides |G|");
  if (C.group_order() % static_cast<std::size_t>(m) != 0) {
    rep.verdict = Verdict::Excluded;
    rep.certificate.push_back(CertificateStep::make("|G| / m", "ratio", {q(C.group_order()), q(m)}));
    rep.conclusion = std::to_string(m) + " does not divide |G|";
    return rep;
  }
  rep.hypotheses.push_back("e = (1/m) sum_{u in U} u is an idempotent, so chi(e) is a rational integer "
                           "for every rational-valued character chi");
  rep.hypotheses.push_back("more generally e_lambda = (1/m) sum_u conj(lambda(u)) u is an idempotent for "
                           "each linear character lambda of U (lambda given by exponents on the cyclic "
                           "factors), so chi(e_lambda) is an integer");
  rep.hypotheses.push_back("chi(u) is constant on the generators of a cyclic subgroup (chi rational), and "
                           "is drawn from HeLP-admissible partial augmentations (box bound " +
                           std::to_string(solver.box_bound()) + ")");
  const auto chars = rational_characters(ctx);
  bool complete = true;
  std::size_t survivors = 0;

  constexpr std::size_t kMaxAssignments = 2000000;
  for (const auto &type : abelian_types(m)) {
    const std::string tname = abelian_type_name(type);
    const AbelianModel U(type);

    // distinct rational character values of admissible units, per element order
    std::map<long, std::vector<std::vector<Rational>>> options;
    bool empty = false;
    for (long d : U.subgroup_order) {
      if (options.count(d))
        continue;
      const AdmissibleSet &adm = solver.admissible(d);
      complete = complete && adm.complete;
      std::set<std::vector<Rational>> vals;
      for (const auto &cand : adm.candidates) {
        std::vector<Rational> v;
        for (const auto &ch : chars) {
          Rational s;
          for (std::size_t c : cand.power(1).support())
            s += ch.values[c] * Rational(static_cast<long>(cand.power(1)[c]));
          v.push_back(s);
        }
        vals.insert(std::move(v));
      }
      if (vals.empty()) {
        rep.certificate.push_back(CertificateStep::make(
            tname + ": admissible torsion units of order " + std::to_string(d), "value", {q(0L)}));
        empty = true;
        break;
      }
      options[d] = {vals.begin(), vals.end()};
    }
    if (empty)
      continue;

    const std::size_t nsub = U.subgroup_order.size();
    std::vector<std::vector<Rational>> dual(static_cast<std::size_t>(U.order),
                                            std::vector<Rational>(nsub));
    for (std::size_t l = 0; l < dual.size(); ++l)
      for (std::size_t S = 0; S < nsub; ++S)
        dual[l][S] = U.dual_sum(l, S);

    std::vector<std::size_t> pick(nsub, 0);
    std::size_t assignment = 0;
    while (true) {
      if (++assignment > kMaxAssignments)
        throw Error("ScanTooLarge", "too many value assignments for " + tname);

      auto describe = [&](std::size_t c, std::size_t l, const Rational &total) {
        std::ostringstream os;
        os << tname << " #" << assignment << " (";
        std::map<long, std::vector<std::string>> by_order;
        for (std::size_t S = 0; S < nsub; ++S)
          by_order[U.subgroup_order[S]].push_back(options.at(U.subgroup_order[S])[pick[S]][c].get_str());
        bool first = true;
        for (const auto &[d, vals] : by_order) {
          os << (first ? "" : "; ") << "order " << d << ": " << chars[c].label << " = [";
          for (std::size_t i = 0; i < vals.size(); ++i)
            os << (i ? "," : "") << vals[i];
          os << "]";
          first = false;
        }
        os << "): " << chars[c].label
           << (l == 0 ? "(e)" : "(e_lambda), lambda = " + U.lambda_name(l)) << " = "
           << frac(total, m);
        return os.str();
      };

      bool failed = false;
      for (std::size_t l = 0; l < dual.size() && !failed; ++l)
        for (std::size_t c = 0; c < chars.size() && !failed; ++c) {
          Rational total = chars[c].values[0];
          for (std::size_t S = 0; S < nsub; ++S)
            total += options.at(U.subgroup_order[S])[pick[S]][c] * dual[l][S];
          if (!is_integral(total / Rational(m))) {
            rep.certificate.push_back(
                CertificateStep::make(describe(c, l, total), "idempotent_rank", {q(m), total}));
            failed = true;
          }
        }
      if (!failed) {
        const std::size_t c = chars.size() > 1 ? 1 : 0;
        Rational total = chars[c].values[0];
        for (std::size_t S = 0; S < nsub; ++S)
          total += options.at(U.subgroup_order[S])[pick[S]][c] * dual[0][S];
        rep.certificate.push_back(
            CertificateStep::make("survivor " + describe(c, 0, total), "idempotent_rank", {q(m), total}));
        ++survivors;
      }

      std::size_t S = 0;
      for (; S < nsub; ++S) {
        if (++pick[S] < options.at(U.subgroup_order[S]).size())
          break;
        pick[S] = 0;
      }
      if (S == nsub)
        break;
    }
  }

  if (survivors) {
    rep.verdict = Verdict::NotExcluded;
    rep.conclusion = std::to_string(survivors) +
                     " value assignment(s) give integral ranks for every rational character";
  } else if (!complete) {
    rep.verdict = Verdict::NotExcluded;
    rep.conclusion = "every assignment fails, but some admissible set touched the box bound; "
                     "exclusion not certified";
  } else {
    rep.verdict = Verdict::Excluded;
    rep.conclusion = "every abelian type and value assignment gives a non-integral idempotent rank";
  }
  return rep;
}

// ---------------------------------------------------------------------------

ObstructionReport quaternion_restriction_check(bool chi_is_rational, const Rational &chi_degree,
                                               const Rational &z_value,
                                               const CharacterTable &quaternion) {
  ObstructionReport rep;
  rep.title = "restriction to a quaternion subgroup";
  if (!quaternion.schur_indices)
    throw Error("UnsupportedTable", "quaternion table carries no Schur indices");
  std::size_t psi = quaternion.num_rows();
  for (std::size_t r = 0; r < quaternion.num_rows(); ++r)
    if ((*quaternion.schur_indices)[r] > 1) {
      psi = r;
      break;
    }
  if (psi == quaternion.num_rows())
    throw Error("UnsupportedTable", "no row with Schur index > 1");
  std::size_t zc = quaternion.num_classes();
  for (std::size_t c = 0; c < quaternion.num_classes(); ++c)
    if (quaternion.classes[c].element_order == 2 && quaternion.classes[c].size == 1)
      zc = c;
  if (zc == quaternion.num_classes())
    throw Error("UnsupportedTable", "no central involution");
  for (std::size_t c = 1; c < quaternion.num_classes(); ++c)
    if (c != zc && !quaternion.values[psi][c].is_zero())
      throw Error("UnsupportedTable", "the Schur-index row must vanish off the centre");

  const int schur = (*quaternion.schur_indices)[psi];
  const Rational psi1 = quaternion.degree(psi);
  const Rational psiz = quaternion.values[psi][zc].as_rational();
  const Rational order = q(quaternion.group_order);
  rep.hypotheses.push_back("chi(z) = " + z_value.get_str() + " at the involution z of U");
  const auto k = CertificateStep::make("multiplicity k of the degree-" + psi1.get_str() +
                                           " character in chi restricted to U",
                                       "restriction_mult", {order, chi_degree, psi1, z_value, psiz});
  const auto lin = CertificateStep::make("degree m carried by linear characters", "linear_part",
                                         {chi_degree, psi1, k.value});
  rep.certificate.push_back(k);
  rep.certificate.push_back(lin);
  if (!k.integral || k.value < 0 || !lin.integral || lin.value < 0)
    throw Error("NonIntegralDecomposition", "k = " + k.value.get_str() + ", m = " + lin.value.get_str());

  if (!chi_is_rational) {
    rep.verdict = Verdict::Inapplicable;
    rep.conclusion = "chi is not known to be afforded by a rational representation";
    return rep;
  }
  rep.hypotheses.push_back("chi is afforded by a rational representation");
  rep.hypotheses.push_back("the degree-" + psi1.get_str() + " character of U has rational Schur index " +
                           std::to_string(schur));
  const auto parity = CertificateStep::make("k / Schur index", "ratio", {k.value, q(static_cast<long>(schur))});
  rep.certificate.push_back(parity);
  if (!parity.integral) {
    rep.verdict = Verdict::Excluded;
    rep.conclusion = "the multiplicity of a Schur-index-" + std::to_string(schur) +
                     " character in a rational representation must be divisible by " +
                     std::to_string(schur);
  } else {
    rep.verdict = Verdict::NotExcluded;
    rep.conclusion = "the parity test is silent";
  }
  return rep;
}

ObstructionReport quaternion_subgroup_check(const GroupContext &ctx, HelpSolver &solver) {
  const ClassTable &C = ctx.classes;
  const CharacterTable Q = family_table(FamilyKind::Quaternion, 8);
  ObstructionReport rep;
  rep.title = "quaternion subgroups of order 8 in V(ZG)";
  rep.hypotheses.push_back("the order of a finite subgroup of V(ZG) divides |G|");
  if (C.group_order() % 8 != 0) {
    rep.verdict = Verdict::Excluded;
    rep.certificate.push_back(CertificateStep::make("|G| / 8", "ratio", {q(C.group_order()), q(8L)}));
    rep.conclusion = "8 does not divide |G|";
    return rep;
  }
  const AdmissibleSet &inv = solver.admissible(2);
  rep.hypotheses.push_back("the involution z of U is a torsion unit of order 2 with HeLP-admissible "
                           "partial augmentations");
  if (inv.candidates.empty()) {
    rep.verdict = inv.complete ? Verdict::Excluded : Verdict::NotExcluded;
    rep.certificate.push_back(CertificateStep::make("admissible torsion units of order 2", "value", {q(0L)}));
    rep.conclusion = "V(ZG) has no torsion units of order 2";
    return rep;
  }

  bool all_excluded = true;
  for (std::size_t i = 0; i < inv.candidates.size(); ++i) {
    const PAVector &z = inv.candidates[i].power(1);
    bool excluded = false;
    for (std::size_t r = 0; r < ctx.table.num_rows() && !excluded; ++r) {
      if (!ctx.table.row_is_rational(r))
        continue;
      const bool afforded_over_q =
          ctx.table.schur_indices && (*ctx.table.schur_indices)[r] == 1;
      const Rational zv = character_value(z, ctx.table.values[r], ctx.matching).as_rational();
      const std::string label = "involution #" + std::to_string(i + 1) + ", chi_" + std::to_string(r + 1);
      try {
        const auto sub = quaternion_restriction_check(afforded_over_q, ctx.table.degree(r), zv, Q);
        if (sub.verdict == Verdict::Excluded) {
          for (const auto &s : sub.certificate) {
            auto step = s;
            step.description = label + ": " + step.description;
            rep.certificate.push_back(step);
          }
          excluded = true;
        }
      } catch (const Error &e) {
        if (e.kind() != "NonIntegralDecomposition")
          throw;
        // chi restricted to U would not be a character of U
        auto step = CertificateStep::make(label + ": multiplicity of the degree-2 character of U",
                                          "restriction_mult",
                                          {q(8L), ctx.table.degree(r), q(2L), zv, q(-2L)});
        rep.certificate.push_back(step);
        excluded = true;
      }
    }
    if (!excluded)
      all_excluded = false;
  }
  if (!inv.complete)
    all_excluded = false;
  rep.hypotheses.push_back("Schur index 1 over Q declared by the table for the characters used");
  rep.verdict = all_excluded ? Verdict::Excluded : Verdict::NotExcluded;
  rep.conclusion = all_excluded ? "no rational representation of G restricts correctly to a quaternion group"
                                : "the restriction test does not exclude a quaternion subgroup";
  return rep;
}

// ---------------------------------------------------------------------------

ObstructionReport classify_finite_p_subgroups(const ClassTable &classes, long p) {
  if (!is_prime(p))
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  const PermGroup &g = classes.group();
  const SylowInfo info = sylow_analysis(g, p);
  ObstructionReport rep;
  rep.title = "finite " + std::to_string(p) + "-subgroups of V(ZG)";
  const std::string ps = std::to_string(p);
  auto absorb = [&](const ObstructionReport &sub) {
    for (const auto &h : sub.hypotheses)
      rep.hypotheses.push_back(h);
    for (auto s : sub.certificate) {
      s.description = sub.title + ": " + s.description;
      rep.certificate.push_back(std::move(s));
    }
  };
  rep.certificate.push_back(CertificateStep::make("|G|_" + ps, "value", {q(info.sylow_order)}));
  rep.hypotheses.push_back("Cohn-Livingstone: a cyclic subgroup of prime power order in V(ZG) "
                           "has an isomorphic copy in G");
  if (info.is_cyclic) {
    const auto a = theorem_a_check(classes, p);
    absorb(a);
    if (p == 2)
      absorb(klein_four_check(g));
    rep.verdict = Verdict::Excluded;
    rep.conclusion = p == 2 ? "V(ZG) has a unique involution, so every finite 2-subgroup is cyclic or "
                              "generalized quaternion; the cyclic Sylow 2-subgroup of G leaves only cyclic "
                              "groups of order dividing " + std::to_string(info.sylow_order) + ", all embedded in G"
                            : "V(ZG) has no elementary abelian subgroup of order " + std::to_string(p * p) +
                                  ", so every finite " + ps + "-subgroup is cyclic of order dividing " +
                                  std::to_string(info.sylow_order) + " and embeds in G";
    return rep;
  }
  if (p == 2 && info.is_generalized_quaternion) {
    absorb(klein_four_check(g));
    rep.verdict = Verdict::Excluded;
    rep.conclusion = "every finite 2-subgroup of V(ZG) is cyclic or generalized quaternion of order "
                     "dividing " +
                     std::to_string(info.sylow_order) +
                     "; each such group occurs in the generalized quaternion Sylow subgroup of G";
    return rep;
  }
  rep.verdict = Verdict::Inapplicable;
  rep.conclusion = p == 2 ? "Sylow 2-subgroups are neither cyclic nor generalized quaternion; use the "
                            "abelian idempotent scan and the quaternion restriction check instead"
                          : "Sylow " + ps + "-subgroups are not cyclic";
  return rep;
}

} // namespace zgu
