#include "zgu/chartab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "zgu/error.hpp"

namespace zgu {

long CharacterTable::exponent() const {
  long e = 1;
  for (const auto &c : classes)
    e = lcm_l(e, c.element_order);
  return e;
}

bool CharacterTable::row_is_rational(std::size_t row) const {
  for (const auto &v : values.at(row))
    if (!v.is_rational())
      return false;
  return true;
}

std::vector<std::size_t> CharacterTable::power_map(long long s) const {
  const std::size_t k = classes.size();
  const long e = exponent();
  const long r = mod_l(s, e);
  if (auto it = power_maps.find(r); it != power_maps.end())
    return it->second;

  std::vector<std::size_t> id(k);
  std::iota(id.begin(), id.end(), 0);
  if (r == 1)
    return id;
  if (r == 0) {
    std::vector<std::size_t> to_one(k, 0);
    return to_one;
  }

  if (gcd_l(r, e) == 1) {
    // x^s is the column whose values are the sigma_s-images of x's column
    std::vector<std::size_t> pm(k);
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<Cyclotomic> image;
      for (const auto &row : values)
        image.push_back(row[c].galois(r));
      bool found = false;
      for (std::size_t d = 0; d < k && !found; ++d) {
        bool same = true;
        for (std::size_t i = 0; i < values.size() && same; ++i)
          same = values[i][d] == image[i];
        if (same) {
          pm[c] = d;
          found = true;
        }
      }
      if (!found)
        throw Error("MissingPowerMap", "no column matches the Galois image of column " +
                                           std::to_string(c) + " under s=" + std::to_string(r));
    }
    return pm;
  }

  // compose stored prime maps: x^(pq) = (x^p)^q
  std::vector<std::size_t> pm = id;
  long rest = r;
  for (long p : prime_factors(r)) {
    while (rest % p == 0) {
      rest /= p;
      std::vector<std::size_t> step;
      if (auto it = power_maps.find(p); it != power_maps.end())
        step = it->second;
      else if (gcd_l(p, e) == 1)
        step = power_map(p);
      else
        throw Error("MissingPowerMap", "table has no " + std::to_string(p) + "-th power map");
      for (auto &c : pm)
        c = step[c];
    }
  }
  return pm;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport verify(const CharacterTable &t) {
  VerificationReport rep;
  auto fail = [&](std::string rel, std::size_t a, std::size_t b, std::string detail) {
    rep.passed = false;
    rep.issues.push_back({std::move(rel), a, b, std::move(detail)});
  };

  const std::size_t k = t.classes.size();
  if (k == 0) {
    fail("shape", 0, 0, "table has no classes");
    return rep;
  }
  if (t.values.size() != k)
    fail("shape", t.values.size(), k, "number of rows differs from number of classes");
  for (std::size_t i = 0; i < t.values.size(); ++i)
    if (t.values[i].size() != k)
      fail("shape", i, t.values[i].size(), "row length differs from number of classes");
  if (!rep.passed)
    return rep;

  if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
    fail("identity-class", 0, 0, "column 0 must be the identity class");
  std::size_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    total += t.classes[c].size;
    if (t.classes[c].size == 0 || t.group_order % t.classes[c].size != 0)
      fail("class-size", c, c, "class size does not divide |G|");
  }
  if (total != t.group_order)
    fail("class-size", 0, k, "class sizes sum to " + std::to_string(total) + ", not |G| = " +
                                 std::to_string(t.group_order));

  for (std::size_t i = 0; i < k; ++i) {
    const auto &d = t.values[i][0];
    if (!d.is_rational() || !is_integral(d.coeffs()[0]) || d.coeffs()[0] <= 0)
      fail("degree", i, 0, "degree is not a positive integer: " + d.to_string());
  }

  // promote everything to one conductor so the sums below stay in one field
  long conductor = 1;
  for (const auto &row : t.values)
    for (const auto &v : row)
      conductor = lcm_l(conductor, v.conductor());
  std::vector<std::vector<Cyclotomic>> val(k), cj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      val[i].push_back(t.values[i][c].embed(conductor));
      cj[i].push_back(val[i][c].conj());
    }

  const Rational order(static_cast<unsigned long>(t.group_order));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < k; ++c)
        sum += val[i][c] * cj[j][c] * Rational(static_cast<unsigned long>(t.classes[c].size));
      const Cyclotomic expect = i == j ? Cyclotomic(order) : Cyclotomic();
      if (sum != expect)
        fail("row-orthogonality", i, j,
             "sum_c |c| chi_i(c) conj(chi_j(c)) = " + sum.to_string() + ", expected " +
                 expect.to_string());
    }

  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < k; ++i)
        sum += val[i][c] * cj[i][d];
      const Cyclotomic expect =
          c == d ? Cyclotomic(order / Rational(static_cast<unsigned long>(t.classes[c].size)))
                 : Cyclotomic();
      if (sum != expect)
        fail("column-orthogonality", c, d,
             "sum_i chi_i(c) conj(chi_i(d)) = " + sum.to_string() + ", expected " +
                 expect.to_string());
    }

  for (const auto &[s, pm] : t.power_maps) {
    if (pm.size() != k) {
      fail("power-map", static_cast<std::size_t>(s), pm.size(), "power map has wrong length");
      continue;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (pm[c] >= k) {
        fail("power-map", static_cast<std::size_t>(s), c, "image out of range");
        continue;
      }
      const long o = t.classes[c].element_order;
      if (t.classes[pm[c]].element_order != o / gcd_l(o, s))
        fail("power-map", static_cast<std::size_t>(s), c, "element order not compatible with power map");
      if (gcd_l(s, o) == 1) {
        // s' = s mod o acts on Q(zeta_o) like s; pick one coprime to the conductor
        long lifted = mod_l(s, o);
        while (gcd_l(lifted, conductor) != 1)
          lifted += o;
        for (std::size_t i = 0; i < k; ++i)
          if (val[i][pm[c]] != val[i][c].galois(lifted)) {
            fail("power-map", static_cast<std::size_t>(s), c,
                 "chi_" + std::to_string(i) + " at x^s is not sigma_s(chi(x))");
            break;
          }
      }
    }
  }

  if (t.schur_indices) {
    if (t.schur_indices->size() != k)
      fail("schur-indices", t.schur_indices->size(), k, "one Schur index per row required");
    for (std::size_t i = 0; i < t.schur_indices->size(); ++i)
      if ((*t.schur_indices)[i] < 1)
        fail("schur-indices", i, i, "Schur index must be positive");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// family tables

namespace {

void assign_names(std::vector<ClassMeta> &classes) {
  std::vector<std::size_t> idx(classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].element_order != classes[b].element_order)
      return classes[a].element_order < classes[b].element_order;
    return classes[a].size < classes[b].size;
  });
  long prev = 0;
  int letter = 0;
  for (std::size_t i : idx) {
    letter = classes[i].element_order == prev ? letter + 1 : 0;
    prev = classes[i].element_order;
    classes[i].name = std::to_string(prev) +
                      (letter < 26 ? std::string(1, static_cast<char>('a' + letter))
                                   : "_" + std::to_string(letter));
  }
}

CharacterTable cyclic_table(long n) {
  CharacterTable t;
  t.name = "C" + std::to_string(n);
  t.group_order = static_cast<std::size_t>(n);
  for (long k = 0; k < n; ++k)
    t.classes.push_back({1, n / gcd_l(n, k), {}});
  for (long j = 0; j < n; ++j) {
    std::vector<Cyclotomic> row;
    for (long k = 0; k < n; ++k)
      row.push_back(Cyclotomic::zeta(n, j * k));
    t.values.push_back(std::move(row));
  }
  for (long p : prime_factors(n)) {
    std::vector<std::size_t> pm;
    for (long k = 0; k < n; ++k)
      pm.push_back(static_cast<std::size_t>(mod_l(p * k, n)));
    t.power_maps[p] = pm;
  }
  assign_names(t.classes);
  return t;
}

// 2 cos(2 pi h k / n) as zeta_n^(hk) + zeta_n^(-hk)
Cyclotomic two_cos(long n, long hk) {
  std::map<long, Rational> raw;
  raw[mod_l(hk, n)] += 1;
  raw[mod_l(-hk, n)] += 1;
  return Cyclotomic::normalize(n, raw);
}

// D_{2m}: classes 1, r^{+-k}, (r^{m/2}), reflections
CharacterTable dihedral_table(long order) {
  const long m = order / 2;
  CharacterTable t;
  t.name = "D" + std::to_string(order);
  t.group_order = static_cast<std::size_t>(order);
  // rotation classes by exponent k (k = 0..m/2), then reflection classes
  std::vector<long> rot;
  for (long k = 0; 2 * k <= m; ++k)
    rot.push_back(k);
  for (long k : rot) {
    const std::size_t size = (k == 0 || 2 * k == m) ? 1 : 2;
    t.classes.push_back({size, m / gcd_l(m, k), {}});
  }
  const bool even = m % 2 == 0;
  const std::size_t nrot = rot.size();
  if (even) {
    t.classes.push_back({static_cast<std::size_t>(m / 2), 2, {}}); // s r^even
    t.classes.push_back({static_cast<std::size_t>(m / 2), 2, {}}); // s r^odd
  } else {
    t.classes.push_back({static_cast<std::size_t>(m), 2, {}});
  }
  if (m == 1) // C2: the "rotation" r^0 and one reflection
    t.classes[1].element_order = 2;

  auto linear = [&](int er, int es) {
    std::vector<Cyclotomic> row;
    for (long k : rot)
      row.emplace_back((k % 2 == 0 || er == 1) ? 1L : -1L);
    row.emplace_back(static_cast<long>(es));
    if (even)
      row.emplace_back(static_cast<long>(es * er));
    return row;
  };
  t.values.push_back(linear(1, 1));
  t.values.push_back(linear(1, -1));
  if (even) {
    t.values.push_back(linear(-1, 1));
    t.values.push_back(linear(-1, -1));
  }
  for (long h = 1; 2 * h < m; ++h) {
    std::vector<Cyclotomic> row;
    for (long k : rot)
      row.push_back(two_cos(m, h * k));
    row.emplace_back(0L);
    if (even)
      row.emplace_back(0L);
    t.values.push_back(std::move(row));
  }

  const long exp = lcm_l(m, 2);
  for (long p : prime_factors(exp)) {
    std::vector<std::size_t> pm;
    for (long k : rot) {
      long e = mod_l(p * k, m);
      if (2 * e > m)
        e = m - e;
      pm.push_back(static_cast<std::size_t>(e));
    }
    for (std::size_t c = nrot; c < t.classes.size(); ++c)
      pm.push_back(p == 2 ? 0 : c);
    t.power_maps[p] = pm;
  }
  assign_names(t.classes);
  return t;
}

// Q_{4m} = <a, b | a^{2m}, b^2 = a^m, a^b = a^-1>
CharacterTable quaternion_table(long order) {
  const long m = order / 4;
  const long n = 2 * m; // order of a
  CharacterTable t;
  t.name = "Q" + std::to_string(order);
  t.group_order = static_cast<std::size_t>(order);
  std::vector<long> rot;
  for (long k = 0; k <= m; ++k)
    rot.push_back(k);
  for (long k : rot)
    t.classes.push_back({(k == 0 || k == m) ? 1u : 2u, n / gcd_l(n, k), {}});
  t.classes.push_back({static_cast<std::size_t>(m), 4, {}}); // b a^even
  t.classes.push_back({static_cast<std::size_t>(m), 4, {}}); // b a^odd
  const std::size_t nrot = rot.size();

  std::vector<int> schur;
  // linear characters: chi(a) = alpha in {+-1}, chi(b) = beta with beta^2 = alpha^m
  std::vector<std::pair<long, long>> lin; // (alpha, beta exponent of zeta_4)
  for (long alpha : {1L, -1L})
    for (long be = 0; be < 4; ++be) {
      const Cyclotomic beta = Cyclotomic::zeta(4, be);
      const Cyclotomic alpha_m = (m % 2 == 0 || alpha == 1) ? Cyclotomic(1L) : Cyclotomic(-1L);
      if (beta * beta == alpha_m)
        lin.emplace_back(alpha, be);
    }
  for (auto [alpha, be] : lin) {
    std::vector<Cyclotomic> row;
    for (long k : rot)
      row.emplace_back((alpha == 1 || k % 2 == 0) ? 1L : -1L);
    const Cyclotomic beta = Cyclotomic::zeta(4, be);
    row.push_back(beta);
    row.push_back(beta * Cyclotomic(alpha));
    t.values.push_back(std::move(row));
    schur.push_back(1);
  }
  for (long h = 1; h < m; ++h) {
    std::vector<Cyclotomic> row;
    for (long k : rot)
      row.push_back(two_cos(n, h * k));
    row.emplace_back(0L);
    row.emplace_back(0L);
    t.values.push_back(std::move(row));
    schur.push_back(h % 2 == 1 ? 2 : 1);
  }
  t.schur_indices = schur;

  for (long p : prime_factors(lcm_l(n, 4))) {
    std::vector<std::size_t> pm;
    for (long k : rot) {
      long e = mod_l(p * k, n);
      if (e > m)
        e = n - e;
      pm.push_back(static_cast<std::size_t>(e));
    }
    for (std::size_t c = nrot; c < nrot + 2; ++c) {
      if (p == 2)
        pm.push_back(static_cast<std::size_t>(m)); // (b a^j)^2 = a^m
      else if (p % 4 == 1 || m % 2 == 0)
        pm.push_back(c);
      else
        pm.push_back(c == nrot ? nrot + 1 : nrot); // (b a^j)^-1 = b a^(j+m)
    }
    t.power_maps[p] = pm;
  }
  assign_names(t.classes);
  return t;
}

} // namespace

FamilyKind parse_family_kind(const std::string &s) {
  if (s == "cyclic")
    return FamilyKind::Cyclic;
  if (s == "dihedral")
    return FamilyKind::Dihedral;
  if (s == "quaternion")
    return FamilyKind::Quaternion;
  throw Error("UnsupportedFamily", "unknown family '" + s + "'");
}

CharacterTable family_table(FamilyKind kind, long order) {
  switch (kind) {
  case FamilyKind::Cyclic:
    if (order < 1)
      throw Error("UnsupportedOrder", "cyclic order must be positive");
    return cyclic_table(order);
  case FamilyKind::Dihedral:
    if (order < 2 || order % 2 != 0)
      throw Error("UnsupportedOrder", "dihedral order must be even and at least 2");
    return dihedral_table(order);
  case FamilyKind::Quaternion:
    if (order < 8 || order % 4 != 0)
      throw Error("UnsupportedOrder", "quaternion order must be 4m >= 8");
    return quaternion_table(order);
  }
  throw Error("UnsupportedFamily", "unknown family");
}

// ---------------------------------------------------------------------------
// induction

std::vector<Cyclotomic> induce_from_cyclic(const ClassTable &classes, const Permutation &x,
                                           long char_index) {
  const PermGroup &g = classes.group();
  if (!g.contains(x))
    throw Error("ElementNotInGroup", x.to_cycle_string());
  const long n = x.order();
  // exponent of each element of <x>, -1 outside
  std::vector<long> exp_of(g.order(), -1);
  Permutation y = Permutation::identity(g.degree());
  for (long k = 0; k < n; ++k) {
    exp_of[g.index_of(y)] = k;
    y = y * x;
  }
  std::vector<Cyclotomic> out;
  for (const auto &cls : classes.classes()) {
    std::map<long, Rational> raw;
    for (const auto &t : g.elements()) {
      const long k = exp_of[g.index_of(cls.representative.conjugate_by(t))];
      if (k >= 0)
        raw[char_index * k] += 1;
    }
    Cyclotomic v = Cyclotomic::normalize(n, raw);
    v *= Rational(1, n);
    out.push_back(std::move(v));
  }
  return out;
}

Cyclotomic inner_product(const ClassTable &classes, const std::vector<Cyclotomic> &f,
                         const std::vector<Cyclotomic> &g) {
  Cyclotomic sum;
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += f.at(c) * g.at(c).conj() * Rational(static_cast<unsigned long>(classes[c].size));
  sum *= Rational(1, static_cast<unsigned long>(classes.group_order()));
  return sum;
}

// ---------------------------------------------------------------------------
// class matching

ClassMatching match_classes(const CharacterTable &table, const ClassTable &classes) {
  const std::size_t k = classes.size();
  if (table.group_order != classes.group_order())
    throw Error("NoConsistentMatch", "table is for |G| = " + std::to_string(table.group_order) +
                                         ", group has order " +
                                         std::to_string(classes.group_order()));
  std::size_t total = 0;
  for (const auto &c : table.classes)
    total += c.size;
  if (total != table.group_order)
    throw Error("NoConsistentMatch", "table class sizes sum to " + std::to_string(total) +
                                         ", not |G| = " + std::to_string(table.group_order));
  if (table.num_classes() != k)
    throw Error("NoConsistentMatch", "table has " + std::to_string(table.num_classes()) +
                                         " classes, group has " + std::to_string(k));

  using Fp = std::pair<std::size_t, long>;
  std::multiset<Fp> want, have;
  for (const auto &c : classes.classes())
    want.insert({c.size, c.element_order});
  for (const auto &c : table.classes)
    have.insert({c.size, c.element_order});
  if (want != have) {
    for (const auto &c : classes.classes())
      if (want.count({c.size, c.element_order}) != have.count({c.size, c.element_order}))
        throw Error("NoConsistentMatch", "fingerprint (size " + std::to_string(c.size) +
                                             ", order " + std::to_string(c.element_order) +
                                             ") of class " + c.name + " has no partner");
    throw Error("NoConsistentMatch", "fingerprint multisets differ");
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col(k, unset);
  std::vector<bool> used(k, false);
  std::vector<std::vector<std::size_t>> solutions;
  constexpr std::size_t cap = 100000;

  auto consistent = [&](std::size_t i) {
    for (const auto &[s, tpm] : table.power_maps) {
      const auto &cpm = classes.power_map(s);
      for (std::size_t a = 0; a <= i; ++a) {
        const std::size_t b = cpm[a];
        if (b <= i && tpm[col[a]] != col[b])
          return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (solutions.size() >= cap)
      return;
    if (i == k) {
      solutions.push_back(col);
      return;
    }
    const auto &ci = classes[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j] || table.classes[j].size != ci.size ||
          table.classes[j].element_order != ci.element_order)
        continue;
      col[i] = j;
      used[j] = true;
      if (consistent(i))
        dfs(i + 1);
      used[j] = false;
      col[i] = unset;
    }
  };
  dfs(0);

  if (solutions.empty())
    throw Error("NoConsistentMatch", "no bijection is consistent with the table's power maps");

  ClassMatching m;
  m.column_of_class = solutions.front();
  m.class_of_column.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    m.class_of_column[m.column_of_class[i]] = i;
  m.consistent_assignments = solutions.size();

  std::vector<std::set<std::size_t>> options(k);
  for (const auto &sol : solutions)
    for (std::size_t i = 0; i < k; ++i)
      options[i].insert(sol[i]);
  std::vector<bool> grouped(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (grouped[i] || options[i].size() < 2)
      continue;
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < k; ++j)
      if (!grouped[j] && options[j] == options[i]) {
        grouped[j] = true;
        group.push_back(j);
      }
    m.ambiguous_classes.push_back(std::move(group));
  }
  return m;
}

std::vector<Cyclotomic> row_on_classes(const CharacterTable &table, std::size_t row,
                                       const ClassMatching &matching) {
  std::vector<Cyclotomic> out;
  for (std::size_t col : matching.column_of_class)
    out.push_back(table.values.at(row).at(col));
  return out;
}

} // namespace zgu
