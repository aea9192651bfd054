#include <doctest.h>

#include "fixtures.hpp"
#include "zgu/error.hpp"
#include "zgu/obstructions.hpp"
#include "zgu/pipeline.hpp"

using namespace zgu;

namespace {

const CertificateStep *find_step(const ObstructionReport &r, const std::string &needle) {
  for (const auto &s : r.certificate)
    if (s.description.find(needle) != std::string::npos)
      return &s;
  return nullptr;
}

} // namespace

TEST_CASE("elementary abelian rank") {
  const std::vector<Cyclotomic> principal{1L, 1L, 1L};
  CHECK(elementary_abelian_rank(principal, 3) == 1);
  const std::vector<Cyclotomic> p7(7, Cyclotomic(1L));
  CHECK(elementary_abelian_rank(p7, 7) == 1);
  CHECK(elementary_abelian_rank(std::vector<Cyclotomic>{2L, 2L, 2L}, 3) == 2);
  CHECK(elementary_abelian_rank(std::vector<Cyclotomic>{2L, -1L, -1L}, 3) == Rational(-2, 3));
  CHECK_THROWS_AS((void)elementary_abelian_rank(std::vector<Cyclotomic>{1L, 1L}, 3), Error);
}

TEST_CASE("theorem A certificates") {
  const auto s3 = theorem_a_check(ClassTable(fixtures::group("s3")), 3);
  CHECK(s3.verdict == Verdict::Excluded);
  CHECK(find_step(s3, "principal character of P")->value == 2);
  CHECK(find_step(s3, "faithful character of P")->value == Rational(-2, 3));
  CHECK(find_step(s3, "difference")->value == Rational(8, 3));
  REQUIRE(s3.witness());
  CHECK(replay(s3));

  const auto f21 = theorem_a_check(ClassTable(fixtures::group("c7c3")), 7);
  CHECK(f21.verdict == Verdict::Excluded);
  CHECK(find_step(f21, "principal character of P")->value == 3);
  CHECK(find_step(f21, "faithful character of P")->value == Rational(-3, 7));
  CHECK(find_step(f21, "difference")->value == Rational(24, 7));
  CHECK(replay(f21));

  CHECK(theorem_a_check(ClassTable(fixtures::group("a7")), 2).verdict == Verdict::Inapplicable);
  const auto c5 = theorem_a_check(ClassTable(fixtures::group("s3")), 5);
  CHECK(c5.verdict == Verdict::Excluded);
  CHECK(c5.witness()->value == Rational(6, 25));
}

TEST_CASE("Klein four chain") {
  const auto sl = klein_four_check(fixtures::group("sl23"));
  CHECK(sl.verdict == Verdict::Excluded);
  CHECK(find_step(sl, "involutions in G")->value == 1);
  CHECK(klein_four_check(fixtures::group("a7")).verdict == Verdict::Identified);
  const auto c3 = klein_four_check(fixtures::cyclic(3));
  CHECK(c3.verdict == Verdict::Excluded);
  REQUIRE(c3.witness());
  CHECK(c3.witness()->value == Rational(3, 4));
  // S3 reduces to C2 modulo O_2'
  const auto s3 = klein_four_check(fixtures::group("s3"));
  CHECK(s3.verdict == Verdict::Excluded);
  CHECK(find_step(s3, "|O_2'(G)|")->value == 3);
}

TEST_CASE("abelian types") {
  const auto t8 = abelian_types(8);
  REQUIRE(t8.size() == 3);
  CHECK(t8[0] == std::vector<long>{8});
  CHECK(t8[1] == std::vector<long>{4, 2});
  CHECK(t8[2] == std::vector<long>{2, 2, 2});
  CHECK(abelian_types(12).size() == 2);
  CHECK(abelian_types(64).size() == 11);
  CHECK(abelian_type_name({4, 2}) == "C4xC2");
  const auto counts = abelian_order_counts({4, 2});
  CHECK(counts.at(1) == 1);
  CHECK(counts.at(2) == 3);
  CHECK(counts.at(4) == 4);
  long total = 0;
  for (const auto &t : abelian_types(36))
    for (const auto &[d, n] : abelian_order_counts(t))
      total += n;
  CHECK(total == 36 * 4);
}

TEST_CASE("abelian scan on A7") {
  const auto &ctx = fixtures::context("a7");
  HelpSolver solver(ctx);
  const auto r8 = abelian_idempotent_scan(ctx, 8, solver);
  CHECK(r8.verdict == Verdict::Excluded);
  const auto *ea = find_step(r8, "C2xC2xC2");
  REQUIRE(ea);
  CHECK(ea->description.find("chi_2(e) = 20/8") != std::string::npos);
  CHECK(ea->value == Rational(5, 2));
  // value pairs {0,4} on C4xC2 give (12 + 2(v1+v2))/8
  for (const char *s : {"[0,0]): chi_2(e) = 12/8", "[4,0]): chi_2(e) = 20/8", "[4,4]): chi_2(e) = 28/8"})
    CHECK(find_step(r8, s) != nullptr);
  CHECK(replay(r8));

  const auto r4 = abelian_idempotent_scan(ctx, 4, solver);
  CHECK(r4.verdict == Verdict::NotExcluded);
  const auto *klein = find_step(r4, "survivor C2xC2");
  REQUIRE(klein);
  CHECK(klein->value == 3);

  const auto r9 = abelian_idempotent_scan(ctx, 16, solver);
  CHECK(r9.verdict == Verdict::Excluded);
  CHECK(r9.witness()->value == Rational(315, 2));
}

TEST_CASE("abelian scan agrees with the p^2 rank") {
  // on C3xC3 with every non-identity element in 3a, chi(e) is the p^2 rank
  const auto &ctx = fixtures::context("a7");
  const auto chars = rational_characters(ctx);
  const std::size_t c3a = ctx.classes.class_by_name("3a");
  for (const auto &ch : chars) {
    const std::vector<Cyclotomic> vals{Cyclotomic(ch.values[0]), Cyclotomic(ch.values[c3a]),
                                       Cyclotomic(ch.values[c3a])};
    CHECK(elementary_abelian_rank(vals, 3) == (ch.values[0] + Rational(8) * ch.values[c3a]) / Rational(9));
  }
  HelpSolver solver(ctx);
  CHECK(replay(abelian_idempotent_scan(ctx, 9, solver)));
}

TEST_CASE("rational characters") {
  const auto &ctx = fixtures::context("a7");
  const auto chars = rational_characters(ctx);
  REQUIRE(chars.size() == 8);
  CHECK(chars[2].label == "chi_3+chi_4");
  CHECK(chars[2].values[0] == 20);
  CHECK(chars[2].values[ctx.classes.class_by_name("7a")] == -1);
}

TEST_CASE("quaternion restriction") {
  const auto q8 = family_table(FamilyKind::Quaternion, 8);
  const auto a = quaternion_restriction_check(true, 6, 2, q8);
  CHECK(a.verdict == Verdict::Excluded);
  CHECK(a.certificate[0].value == 1); // k
  CHECK(a.certificate[1].value == 4); // m
  REQUIRE(a.witness());
  CHECK(a.witness()->value == Rational(1, 2));
  CHECK(replay(a));

  const auto b = quaternion_restriction_check(true, 8, -8, q8);
  CHECK(b.verdict == Verdict::NotExcluded);
  CHECK(b.certificate[0].value == 4);

  CHECK(quaternion_restriction_check(true, 2, -2, q8).verdict == Verdict::Excluded);
  CHECK(quaternion_restriction_check(false, 2, -2, q8).verdict == Verdict::Inapplicable);
  try {
    (void)quaternion_restriction_check(true, 3, 0, q8);
    FAIL("expected NonIntegralDecomposition");
  } catch (const Error &e) {
    CHECK(e.kind() == "NonIntegralDecomposition");
  }

  const auto &ctx = fixtures::context("a7");
  HelpSolver solver(ctx);
  const auto full = quaternion_subgroup_check(ctx, solver);
  CHECK(full.verdict == Verdict::Excluded);
  CHECK(full.witness()->description.find("chi_2") != std::string::npos);

  // SL(2,3) really contains Q8, so the check must stay silent
  const auto &sl = fixtures::context("sl23");
  HelpSolver sls(sl);
  CHECK(quaternion_subgroup_check(sl, sls).verdict == Verdict::NotExcluded);
}

TEST_CASE("classification") {
  CHECK(classify_finite_p_subgroups(ClassTable(fixtures::group("c7c3")), 7).verdict == Verdict::Excluded);
  const auto sl = classify_finite_p_subgroups(ClassTable(fixtures::group("sl23")), 2);
  CHECK(sl.verdict == Verdict::Excluded);
  CHECK(sl.conclusion.find("generalized quaternion") != std::string::npos);
  const auto a7 = classify_finite_p_subgroups(ClassTable(fixtures::group("a7")), 2);
  CHECK(a7.verdict == Verdict::Inapplicable);
  CHECK(a7.conclusion.find("abelian idempotent scan") != std::string::npos);
}

TEST_CASE("A7 walk-through") {
  const auto &ctx = fixtures::context("a7");
  HelpSolver solver(ctx);
  const auto reports = example_a7(ctx, solver);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].verdict == Verdict::Identified);
  CHECK(reports[1].verdict == Verdict::NotExcluded);
  CHECK(find_step(reports[1], "{2a: 2, 4a: -1}: chi_2(u)")->value == 4);
  CHECK(reports[2].verdict == Verdict::Excluded);
  CHECK(reports[3].verdict == Verdict::Excluded);
  for (const auto &r : reports)
    CHECK(replay(r));
}
