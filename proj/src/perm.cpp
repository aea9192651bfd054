#include "zgu/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zgu/error.hpp"

namespace zgu {

// ---------------------------------------------------------------------------
// number theory

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n))
    r = r / p * (p - 1);
  return r;
}

long mobius(long n) {
  long r = 1;
  for (long p : prime_factors(n)) {
    n /= p;
    if (n % p == 0)
      return 0;
    r = -r;
  }
  return r;
}

long mod_l(long long a, long n) {
  long long r = a % n;
  return static_cast<long>(r < 0 ? r + n : r);
}

long inverse_mod(long s, long n) {
  if (n == 1)
    return 0;
  s = mod_l(s, n);
  for (long t = 1; t < n; ++t)
    if ((s * t) % n == 1)
      return t;
  throw Error("NotCoprime", std::to_string(s) + " is not invertible modulo " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw Error("DegreeMismatch", "degree " + std::to_string(degree) + " outside 0.." +
                                      std::to_string(kMaxDegree));
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i)
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const auto n = static_cast<int>(images.size());
  if (n > kMaxDegree)
    throw Error("InvalidPermutation", "degree " + std::to_string(n) + " exceeds " +
                                          std::to_string(kMaxDegree));
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int img = images[static_cast<std::size_t>(i)];
    if (img < 0 || img >= n)
      throw Error("InvalidPermutation",
                  "image " + std::to_string(img) + " of point " + std::to_string(i) + " out of range");
    if (seen[static_cast<std::size_t>(img)])
      throw Error("InvalidPermutation", "image " + std::to_string(img) + " repeated");
    seen[static_cast<std::size_t>(img)] = true;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(img);
  }
  return p;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i)
    r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i)
    r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation acc = identity(degree_);
  while (k) {
    if (k & 1u)
      acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

Permutation Permutation::conjugate_by(const Permutation &t) const {
  return t.inverse() * *this * t;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i)
    if (images_[i] != i)
      return false;
  return true;
}

long Permutation::order() const {
  long ord = 1;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i])
      continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<int> Permutation::images() const {
  return {images_.begin(), images_.begin() + degree_};
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::array<bool, kMaxDegree> seen{};
  bool any = false;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i)
        os << ',';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = degree_;
  for (std::size_t i = 0; i < degree_; ++i)
    h = h * 1000003u ^ images_[i];
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup

namespace {

std::vector<Permutation> closure(const std::vector<Permutation> &gens, int degree) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto &g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > kMaxGroupOrder)
          throw Error("OrderCapExceeded",
                      "group order exceeds " + std::to_string(kMaxGroupOrder));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

PermGroup PermGroup::enumerate(std::vector<Permutation> generators, int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw Error("DegreeMismatch", "degree " + std::to_string(degree) + " outside 1.." +
                                      std::to_string(kMaxDegree));
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].degree() != degree)
      throw Error("DegreeMismatch", "generator " + std::to_string(i) + " has degree " +
                                        std::to_string(generators[i].degree()) + ", expected " +
                                        std::to_string(degree));
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = closure(generators, degree);
  g.generators_ = std::move(generators);
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements, int degree) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = degree;
  std::vector<Permutation> span{Permutation::identity(degree)};
  for (const auto &e : elements) {
    if (std::binary_search(span.begin(), span.end(), e))
      continue;
    g.generators_.push_back(e);
    span = closure(g.generators_, degree);
  }
  require(span == elements, "from_elements: element set is not closed");
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Permutation &x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t PermGroup::index_of(const Permutation &x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x)
    throw Error("ElementNotInGroup", x.to_cycle_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

long PermGroup::exponent() const {
  long e = 1;
  for (const auto &x : elements_)
    e = std::lcm(e, x.order());
  return e;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// ClassTable

ClassTable::ClassTable(PermGroup group) : group_(std::move(group)) {
  const auto &elems = group_.elements();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(elems.size(), unset);
  struct Raw {
    std::size_t rep_index;
    std::size_t size;
    long order;
  };
  std::vector<Raw> found;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (raw[i] != unset)
      continue;
    // orbit of elems[i] under conjugation by generators; i is lex-minimal
    const std::size_t id = found.size();
    std::vector<std::size_t> stack{i};
    raw[i] = id;
    std::size_t size = 1;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (const auto &g : group_.generators()) {
        const std::size_t j = group_.index_of(elems[k].conjugate_by(g));
        if (raw[j] == unset) {
          raw[j] = id;
          ++size;
          stack.push_back(j);
        }
      }
    }
    found.push_back({i, size, elems[i].order()});
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto &x = found[a];
    const auto &y = found[b];
    if (x.order != y.order)
      return x.order < y.order;
    if (x.size != y.size)
      return x.size < y.size;
    return x.rep_index < y.rep_index;
  });
  std::vector<std::size_t> new_index(found.size());
  for (std::size_t k = 0; k < perm.size(); ++k)
    new_index[perm[k]] = k;

  classes_.resize(found.size());
  long prev_order = 0;
  int letter = 0;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const auto &r = found[perm[k]];
    letter = (r.order == prev_order) ? letter + 1 : 0;
    prev_order = r.order;
    std::string suffix = letter < 26 ? std::string(1, static_cast<char>('a' + letter))
                                     : "_" + std::to_string(letter);
    classes_[k] = {elems[r.rep_index], r.size, r.order, std::to_string(r.order) + suffix};
  }
  class_by_element_.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    class_by_element_[i] = new_index[raw[i]];

  exponent_ = 1;
  for (const auto &c : classes_)
    exponent_ = std::lcm(exponent_, c.element_order);
  power_maps_.resize(static_cast<std::size_t>(exponent_));
  for (long s = 0; s < exponent_; ++s) {
    auto &pm = power_maps_[static_cast<std::size_t>(s)];
    pm.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c)
      pm[c] = class_of(classes_[c].representative.pow(s));
  }
}

std::size_t ClassTable::class_of(const Permutation &x) const {
  return class_by_element_[group_.index_of(x)];
}

std::size_t ClassTable::class_by_name(const std::string &name) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].name == name)
      return c;
  throw Error("UnknownClass", "no class named '" + name + "'");
}

const std::vector<std::size_t> &ClassTable::power_map(long long s) const {
  return power_maps_[static_cast<std::size_t>(mod_l(s, exponent_))];
}

std::vector<std::size_t> ClassTable::central_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].size == 1)
      out.push_back(c);
  return out;
}

ClassTable conjugacy_classes(const PermGroup &group) { return ClassTable(group); }

// ---------------------------------------------------------------------------
// Sylow analysis, normalizers, quotients

namespace {

std::size_t p_part(std::size_t n, long p) {
  std::size_t r = 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    r *= static_cast<std::size_t>(p);
  }
  return r;
}

bool is_p_power(long n, long p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::vector<Permutation> cyclic_elements(const Permutation &x) {
  std::vector<Permutation> out;
  Permutation y = Permutation::identity(x.degree());
  do {
    out.push_back(y);
    y = y * x;
  } while (!y.is_identity());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

PermGroup sylow_subgroup(const PermGroup &group, long p) {
  if (!is_prime(p))
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  const std::size_t target = p_part(group.order(), p);
  const int deg = group.degree();

  const Permutation *best = &group.identity();
  for (const auto &x : group.elements())
    if (is_p_power(x.order(), p) && x.order() > best->order())
      best = &x;

  std::vector<Permutation> gens;
  if (!best->is_identity())
    gens.push_back(*best);
  PermGroup sub = PermGroup::enumerate(gens, deg);
  while (sub.order() < target) {
    // some p-element of N_G(sub) outside sub exists by Sylow's theorem
    bool extended = false;
    for (const auto &g : group.elements()) {
      if (!is_p_power(g.order(), p) || sub.contains(g))
        continue;
      bool normalizes = true;
      for (const auto &h : sub.generators())
        if (!sub.contains(h.conjugate_by(g))) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;
      gens.push_back(g);
      sub = PermGroup::enumerate(gens, deg);
      extended = true;
      break;
    }
    require(extended, "sylow_subgroup: no p-element in normalizer");
  }
  require(sub.order() == target, "sylow_subgroup: overshoot");
  return sub;
}

SylowInfo sylow_analysis(const PermGroup &group, long p) {
  if (!is_prime(p))
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  SylowInfo info;
  info.p = p;
  info.sylow_order = p_part(group.order(), p);

  std::vector<const Permutation *> involutions;
  bool has_full_order = info.sylow_order == 1;
  for (const auto &x : group.elements()) {
    const long o = x.order();
    if (o == 2)
      involutions.push_back(&x);
    if (static_cast<std::size_t>(o) == info.sylow_order)
      has_full_order = true;
  }
  info.involution_count = involutions.size();
  info.is_cyclic = has_full_order;

  for (std::size_t i = 0; i < involutions.size() && !info.has_klein_four; ++i)
    for (std::size_t j = i + 1; j < involutions.size(); ++j)
      if (*involutions[i] * *involutions[j] == *involutions[j] * *involutions[i]) {
        info.has_klein_four = true;
        break;
      }

  if (p == 2 && info.sylow_order >= 8 && !info.is_cyclic) {
    const PermGroup sylow = sylow_subgroup(group, 2);
    std::size_t inv = 0;
    for (const auto &x : sylow.elements())
      if (x.order() == 2)
        ++inv;
    info.is_generalized_quaternion = inv == 1;
  }
  return info;
}

PermGroup normalizer_of_cyclic(const PermGroup &group, const Permutation &x) {
  if (!group.contains(x))
    throw Error("ElementNotInGroup", x.to_cycle_string());
  const auto cyc = cyclic_elements(x);
  std::vector<Permutation> normalizer;
  for (const auto &g : group.elements())
    if (std::binary_search(cyc.begin(), cyc.end(), x.conjugate_by(g)))
      normalizer.push_back(g);
  return PermGroup::from_elements(std::move(normalizer), group.degree());
}

PermGroup normal_closure(const PermGroup &group, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup sub = PermGroup::enumerate({}, group.degree());
  for (const auto &e : elements)
    if (!sub.contains(e)) {
      gens.push_back(e);
      sub = PermGroup::enumerate(gens, group.degree());
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i)
      for (const auto &t : group.generators()) {
        Permutation c = gens[i].conjugate_by(t);
        if (!sub.contains(c)) {
          gens.push_back(std::move(c));
          sub = PermGroup::enumerate(gens, group.degree());
          changed = true;
          break;
        }
      }
  }
  return sub;
}

QuotientResult o_pi_prime_quotient(const PermGroup &group, std::span<const long> pi) {
  if (pi.empty())
    throw Error("InvalidArgument", "pi must be a nonempty set of primes");
  for (long p : pi)
    if (!is_prime(p))
      throw Error("NotPrime", std::to_string(p) + " is not prime");
  auto coprime_to_pi = [&](std::size_t n) {
    for (long p : pi)
      if (n % static_cast<std::size_t>(p) == 0)
        return false;
    return true;
  };

  const ClassTable classes(group);
  std::vector<Permutation> kernel_gens;
  for (const auto &c : classes.classes()) {
    if (c.element_order == 1 || !coprime_to_pi(static_cast<std::size_t>(c.element_order)))
      continue;
    const Permutation rep[] = {c.representative};
    const PermGroup closure_of_class = normal_closure(group, rep);
    if (coprime_to_pi(closure_of_class.order()))
      kernel_gens.push_back(c.representative);
  }
  QuotientResult out;
  out.kernel = normal_closure(group, kernel_gens);
  require(coprime_to_pi(out.kernel.order()), "O_pi' kernel order not coprime to pi");

  if (out.kernel.order() == 1) {
    out.quotient = group;
    return out;
  }
  const std::size_t index = group.order() / out.kernel.order();
  if (index > static_cast<std::size_t>(kMaxDegree))
    throw Error("QuotientTooLarge", "coset action on " + std::to_string(index) +
                                        " points exceeds degree cap " + std::to_string(kMaxDegree));

  // right cosets K g, labelled in order of first appearance among sorted elements
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(group.order(), unset);
  std::vector<std::size_t> coset_rep;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (coset_of[i] != unset)
      continue;
    const std::size_t id = coset_rep.size();
    coset_rep.push_back(i);
    for (const auto &k : out.kernel.elements())
      coset_of[group.index_of(k * group.elements()[i])] = id;
  }
  std::vector<Permutation> qgens;
  for (const auto &t : group.generators()) {
    std::vector<int> images(index);
    for (std::size_t c = 0; c < index; ++c)
      images[c] = static_cast<int>(coset_of[group.index_of(group.elements()[coset_rep[c]] * t)]);
    qgens.push_back(Permutation::from_images(images));
  }
  out.quotient = PermGroup::enumerate(std::move(qgens), static_cast<int>(index));
  require(out.quotient.order() == index, "quotient order mismatch");
  return out;
}

} // namespace zgu
