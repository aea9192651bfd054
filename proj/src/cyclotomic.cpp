#include "zgu/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "zgu/error.hpp"
#include "zgu/perm.hpp"

namespace zgu {

std::int64_t to_int64(const Rational &r) {
  if (!is_integral(r) || !r.get_num().fits_slong_p())
    throw Error("NotInteger", r.get_str() + " is not a machine integer");
  return r.get_num().get_si();
}

namespace {

using Poly = std::vector<Integer>;

// a / b for monic b with exact division
Poly exact_divide(Poly a, const Poly &b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size())
    return {};
  Poly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j)
        a[i - db + j] -= c * b[j];
  }
  for (const auto &r : a)
    require(r == 0, "cyclotomic polynomial division left a remainder");
  return q;
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::unordered_map<long, Poly> cache;
  require(n >= 1, "cyclotomic_polynomial: conductor must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d : divisors(n))
    if (d < n)
      p = exact_divide(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// reduce a dense polynomial (any length) modulo Phi_n
std::vector<Rational> reduce(std::vector<Rational> a, long n) {
  const auto &phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0)
      continue;
    const Rational c = a[i];
    for (std::size_t j = 0; j <= deg; ++j)
      a[i - deg + j] -= c * Rational(phi[j]);
  }
  a.resize(deg);
  return a;
}

} // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational &r) : conductor_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::normalize(long conductor, const std::map<long, Rational> &raw) {
  if (conductor < 1)
    throw Error("InvalidConductor", std::to_string(conductor));
  std::vector<Rational> dense(static_cast<std::size_t>(conductor));
  for (const auto &[k, v] : raw)
    dense[static_cast<std::size_t>(mod_l(k, conductor))] += v;
  return {conductor, reduce(std::move(dense), conductor)};
}

Cyclotomic Cyclotomic::zeta(long conductor, long exponent) {
  return normalize(conductor, {{exponent, Rational(1)}});
}

bool Cyclotomic::is_zero() const {
  for (const auto &c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational())
    throw Error("NotRational", to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(long m) const {
  if (m == conductor_)
    return *this;
  if (m % conductor_ != 0)
    throw Error("InvalidConductor", std::to_string(conductor_) + " does not divide " + std::to_string(m));
  const long step = m / conductor_;
  std::vector<Rational> dense(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    dense[k * static_cast<std::size_t>(step)] = coeffs_[k];
  return {m, reduce(std::move(dense), m)};
}

Cyclotomic Cyclotomic::galois(long s) const {
  if (gcd_l(mod_l(s, conductor_), conductor_) != 1)
    throw Error("NotCoprime", std::to_string(s) + " is not coprime to conductor " +
                                  std::to_string(conductor_));
  std::vector<Rational> dense(static_cast<std::size_t>(conductor_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      dense[static_cast<std::size_t>(mod_l(static_cast<long long>(k) * s, conductor_))] += coeffs_[k];
  return {conductor_, reduce(std::move(dense), conductor_)};
}

Rational Cyclotomic::trace() const {
  // Tr(zeta^k) is the Ramanujan sum c_n(k) = mu(n/g) phi(n) / phi(n/g), g = gcd(n, k)
  const long n = conductor_;
  Rational t;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0)
      continue;
    const long g = gcd_l(static_cast<long>(k), n);
    const long m = n / g;
    t += coeffs_[k] * Rational(mobius(m) * (euler_phi(n) / euler_phi(m)));
  }
  return t;
}

Rational Cyclotomic::trace_over(long m) const {
  const long big = lcm_l(conductor_, m);
  const Cyclotomic a = embed(big);
  // a must be fixed by every sigma_s with s = 1 mod m
  for (long s = 1; s < big; s += m)
    if (gcd_l(s, big) == 1 && a.galois(s) != a)
      throw Error("NotInSubfield", to_string() + " does not lie in Q(zeta_" + std::to_string(m) + ")");
  Rational t = a.trace();
  t *= Rational(euler_phi(m));
  t /= Rational(euler_phi(big));
  return t;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

namespace {

void promote(Cyclotomic &a, Cyclotomic &b) {
  const long m = lcm_l(a.conductor(), b.conductor());
  a = a.embed(m);
  b = b.embed(m);
}

} // namespace

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  if (o.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  promote(*this, b);
  return *this += b;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) { return *this += -o; }

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  if (o.conductor_ != conductor_) {
    Cyclotomic b = o;
    promote(*this, b);
    return *this *= b;
  }
  if (o.is_rational())
    return *this *= o.coeffs_[0];
  if (is_rational()) {
    const Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  std::vector<Rational> prod(coeffs_.size() * 2);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0)
        prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = reduce(std::move(prod), conductor_);
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Rational &r) {
  for (auto &c : coeffs_)
    c *= r;
  return *this;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.conductor_ == b.conductor_)
    return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  promote(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0)
      continue;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    const Rational a = abs(c);
    if (k == 0)
      os << a.get_str();
    else {
      if (a != 1)
        os << a.get_str() << "*";
      os << "zeta" << conductor_ << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

} // namespace zgu
