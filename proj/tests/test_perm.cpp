#include <doctest.h>

#include "fixtures.hpp"
#include "zgu/error.hpp"
#include "zgu/perm.hpp"

using namespace zgu;
using fixtures::perm;

TEST_CASE("permutation basics") {
  const auto a = perm(3, {{0, 1, 2}});
  const auto b = perm(3, {{0, 1}});
  // right action: (a*b)(i) = b(a(i))
  const auto ab = a * b;
  for (int i = 0; i < 3; ++i)
    CHECK(ab[i] == b[a[i]]);
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(3).is_identity());
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK(a.to_cycle_string() == "(0,1,2)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("invalid permutations are rejected") {
  const std::vector<int> dup{0, 0, 1};
  CHECK_THROWS_AS(Permutation::from_images(dup), Error);
  const std::vector<int> out{0, 3, 1};
  CHECK_THROWS_AS(Permutation::from_images(out), Error);
  std::vector<int> big(33);
  for (int i = 0; i < 33; ++i)
    big[static_cast<std::size_t>(i)] = i;
  CHECK_THROWS_AS(Permutation::from_images(big), Error);
}

TEST_CASE("enumerate") {
  CHECK(PermGroup::enumerate({perm(3, {{0, 1, 2}}), perm(3, {{0, 1}})}, 3).order() == 6);
  CHECK(fixtures::group("a7").order() == 2520);
  CHECK(PermGroup::enumerate({}, 5).order() == 1);

  try {
    (void)PermGroup::enumerate({perm(3, {{0, 1}})}, 4);
    FAIL("expected DegreeMismatch");
  } catch (const Error &e) {
    CHECK(e.kind() == "DegreeMismatch");
  }
  // S9 has 362880 elements
  try {
    (void)PermGroup::enumerate({perm(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}), perm(9, {{0, 1}})}, 9);
    FAIL("expected OrderCapExceeded");
  } catch (const Error &e) {
    CHECK(e.kind() == "OrderCapExceeded");
  }
  const auto g = fixtures::group("s3");
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  CHECK(g.identity().is_identity());
}

TEST_CASE("conjugacy classes") {
  const ClassTable s3(fixtures::group("s3"));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].size == 1);
  CHECK(s3[1].size == 3);
  CHECK(s3[2].size == 2);
  CHECK(s3[1].element_order == 2);
  CHECK(s3[2].element_order == 3);

  const ClassTable a7(fixtures::group("a7"));
  const std::vector<std::size_t> sizes{1, 105, 70, 280, 630, 504, 210, 360, 360};
  const std::vector<long> orders{1, 2, 3, 3, 4, 5, 6, 7, 7};
  REQUIRE(a7.size() == 9);
  std::size_t total = 0;
  for (std::size_t c = 0; c < 9; ++c) {
    CHECK(a7[c].size == sizes[c]);
    CHECK(a7[c].element_order == orders[c]);
    total += a7[c].size;
  }
  CHECK(total == 2520);
  CHECK(a7[4].name == "4a");
  CHECK(a7[8].name == "7b");

  const ClassTable c4(fixtures::cyclic(4));
  CHECK(c4.size() == 4);
  CHECK(c4.central_classes().size() == 4);
  CHECK_THROWS_AS((void)a7.class_by_name("9z"), Error);
}

TEST_CASE("power maps") {
  const ClassTable a7(fixtures::group("a7"));
  const auto &id = a7.power_map(1);
  for (std::size_t c = 0; c < a7.size(); ++c)
    CHECK(id[c] == c);
  CHECK(a7.power_map(2)[a7.class_by_name("4a")] == a7.class_by_name("2a"));
  const ClassTable s3(fixtures::group("s3"));
  for (std::size_t c = 0; c < s3.size(); ++c)
    CHECK(s3.power_map(-1)[c] == c);
  // 7a and 7b are swapped by inversion
  CHECK(a7.power_map(-1)[a7.class_by_name("7a")] == a7.class_by_name("7b"));
}

TEST_CASE("sylow analysis") {
  const auto a7 = sylow_analysis(fixtures::group("a7"), 2);
  CHECK(a7.sylow_order == 8);
  CHECK_FALSE(a7.is_cyclic);
  CHECK_FALSE(a7.is_generalized_quaternion);
  CHECK(a7.has_klein_four);
  CHECK(a7.involution_count == 105);

  const auto sl = sylow_analysis(fixtures::group("sl23"), 2);
  CHECK(sl.sylow_order == 8);
  CHECK_FALSE(sl.is_cyclic);
  CHECK(sl.is_generalized_quaternion);
  CHECK_FALSE(sl.has_klein_four);
  CHECK(sl.involution_count == 1);

  const auto c6 = sylow_analysis(fixtures::cyclic(6), 3);
  CHECK(c6.sylow_order == 3);
  CHECK(c6.is_cyclic);

  CHECK(sylow_analysis(fixtures::group("c7c3"), 2).sylow_order == 1);
  CHECK_THROWS_AS((void)sylow_analysis(fixtures::group("s3"), 4), Error);
  CHECK(sylow_subgroup(fixtures::group("a7"), 3).order() == 9);
  CHECK(sylow_subgroup(fixtures::group("a7"), 2).order() == 8);
}

TEST_CASE("normalizers") {
  const auto s3 = fixtures::group("s3");
  CHECK(normalizer_of_cyclic(s3, perm(3, {{0, 1, 2}})).order() == 6);
  CHECK(normalizer_of_cyclic(s3, perm(3, {{0, 1}})).order() == 2);
  const auto c5 = fixtures::cyclic(5);
  CHECK(normalizer_of_cyclic(c5, c5.elements()[2]).order() == 5);
  const auto f21 = fixtures::group("c7c3");
  const auto n = normalizer_of_cyclic(f21, perm(7, {{0, 1, 2, 3, 4, 5, 6}}));
  CHECK(n.order() == 21);
  CHECK_THROWS_AS((void)normalizer_of_cyclic(s3, perm(4, {{0, 1, 2, 3}})), Error);
}

TEST_CASE("O_pi' quotients") {
  const long three[] = {3};
  const long two[] = {2};
  const auto a4 = o_pi_prime_quotient(fixtures::group("a4"), three);
  CHECK(a4.kernel.order() == 4);
  CHECK(a4.quotient.order() == 3);
  const auto s3 = o_pi_prime_quotient(fixtures::group("s3"), three);
  CHECK(s3.kernel.order() == 1);
  CHECK(s3.quotient.order() == 6);
  const auto c6 = o_pi_prime_quotient(fixtures::cyclic(6), two);
  CHECK(c6.kernel.order() == 3);
  CHECK(c6.quotient.order() == 2);
  // kernel is normal
  const auto g = fixtures::group("a4");
  for (const auto &k : a4.kernel.elements())
    for (const auto &t : g.elements())
      CHECK(a4.kernel.contains(k.conjugate_by(t)));
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(12) == 4);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(prime_factors(360) == std::vector<long>{2, 3, 5});
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(mod_l(-3, 7) == 4);
  CHECK_THROWS_AS((void)inverse_mod(2, 4), Error);
}
