#include <doctest.h>

#include "zgu/cyclotomic.hpp"
#include "zgu/error.hpp"
#include "zgu/perm.hpp"

using namespace zgu;

TEST_CASE("normal form") {
  // zeta_5^4 reduces modulo Phi_5
  const auto z = Cyclotomic::normalize(5, {{4, Rational(1)}});
  const auto expect = Cyclotomic::normalize(5, {{0, Rational(-1)}, {1, Rational(-1)}, {2, Rational(-1)}, {3, Rational(-1)}});
  CHECK(z == expect);
  CHECK(z.coeffs().size() == 4);
  CHECK(z.coeffs()[0] == -1);
  CHECK(Cyclotomic::zeta(5, 4) == z);
  CHECK(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1L));
  CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic(-1L));
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // normalizing a normal form changes nothing
  const auto w = Cyclotomic::zeta(12, 5) * Rational(3, 2) + Cyclotomic::zeta(12, 7);
  std::map<long, Rational> raw;
  for (std::size_t k = 0; k < w.coeffs().size(); ++k)
    raw[static_cast<long>(k)] = w.coeffs()[k];
  CHECK(Cyclotomic::normalize(w.conductor(), raw) == w);
}

TEST_CASE("galois action") {
  CHECK(Cyclotomic::zeta(5).galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(Cyclotomic(Rational(7, 3)).galois(4) == Cyclotomic(Rational(7, 3)));
  CHECK(Cyclotomic::zeta(7).galois(3).galois(5) == Cyclotomic::zeta(7));
  CHECK_THROWS_AS((void)Cyclotomic::zeta(6).galois(3), Error);
  CHECK(Cyclotomic::zeta(8).conj() == Cyclotomic::zeta(8, 7));
}

TEST_CASE("traces") {
  for (long p : {2L, 3L, 5L, 7L, 11L})
    CHECK(Cyclotomic::zeta(p).trace() == -1);
  CHECK(Cyclotomic::zeta(8).trace() == 0);
  CHECK(Cyclotomic::zeta(9).trace() == 0);
  CHECK(Cyclotomic::zeta(12, 1).trace() == 0);
  CHECK(Cyclotomic(1L).embed(12).trace() == 4);
  CHECK(Cyclotomic::zeta(7).embed(14).trace() == -1); // Q(zeta_14) = Q(zeta_7)
  const auto b7 = Cyclotomic::zeta(7, 1) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  CHECK(b7.trace() == -3);
  CHECK(b7.embed(14).trace_over(7) == -3);
  CHECK_THROWS_AS((void)Cyclotomic::zeta(4).trace_over(2), Error);
}

TEST_CASE("rational recognition") {
  const auto w = Cyclotomic::zeta(3);
  CHECK((w * Rational(2) + w * w * Rational(2) + Cyclotomic(5L)).as_rational() == 3);
  CHECK_THROWS_AS((void)Cyclotomic::zeta(4).as_rational(), Error);
  CHECK(Cyclotomic().as_rational() == 0);
  CHECK(Cyclotomic().is_zero());
}

TEST_CASE("mixed conductors promote") {
  const auto i = Cyclotomic::zeta(4);
  const auto w = Cyclotomic::zeta(3);
  const auto s = i * w;
  CHECK(s.conductor() == 12);
  CHECK(s == Cyclotomic::zeta(12, 7));
  CHECK(i * i == Cyclotomic(-1L));
  CHECK(i + w - i == w);
}
