#include <doctest.h>

#include "fixtures.hpp"
#include "zgu/chartab.hpp"
#include "zgu/error.hpp"

using namespace zgu;
using fixtures::perm;

TEST_CASE("bundled tables verify") {
  for (const char *name : fixtures::kBundled) {
    CAPTURE(name);
    const auto t = fixtures::table(name);
    const auto rep = verify(t);
    CHECK(rep.passed);
    Rational sq;
    for (std::size_t r = 0; r < t.num_rows(); ++r)
      sq += t.degree(r) * t.degree(r);
    CHECK(sq == Rational(static_cast<unsigned long>(t.group_order)));
  }
  const auto a7 = fixtures::table("a7");
  std::vector<long> degrees;
  for (std::size_t r = 0; r < a7.num_rows(); ++r)
    degrees.push_back(a7.degree(r).get_num().get_si());
  CHECK(degrees == std::vector<long>{1, 6, 10, 10, 14, 14, 15, 21, 35});
}

TEST_CASE("deleted permutation character of A7") {
  // chi_2 = (fixed points) - 1 on the natural action
  const auto &ctx = fixtures::context("a7");
  const auto row = ctx.row(1);
  for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
    const auto &rep = ctx.classes[c].representative;
    long fixed = 0;
    for (int i = 0; i < rep.degree(); ++i)
      fixed += rep[i] == i;
    CHECK(row[c] == Cyclotomic(fixed - 1));
  }
}

TEST_CASE("perturbed tables fail with indices") {
  auto t = fixtures::table("a7");
  t.values[1][2] += Cyclotomic(1L);
  const auto rep = verify(t);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.issues.empty());
  bool row_pair = false;
  for (const auto &i : rep.issues)
    row_pair = row_pair || (i.relation == "row-orthogonality" && (i.first == 1 || i.second == 1));
  CHECK(row_pair);

  CharacterTable c2;
  c2.group_order = 2;
  c2.classes = {{1, 1, "1a"}, {1, 2, "2a"}};
  c2.values = {{Cyclotomic(1L), Cyclotomic(1L)}, {Cyclotomic(1L), Cyclotomic(-1L)}};
  CHECK(verify(c2).passed);
  c2.values[1][1] = Cyclotomic(1L);
  CHECK_FALSE(verify(c2).passed);
}

TEST_CASE("family tables") {
  const auto q8 = family_table(FamilyKind::Quaternion, 8);
  CHECK(verify(q8).passed);
  REQUIRE(q8.schur_indices);
  CHECK(*q8.schur_indices == std::vector<int>{1, 1, 1, 1, 2});
  std::size_t z = 0;
  for (std::size_t c = 0; c < q8.num_classes(); ++c)
    if (q8.classes[c].element_order == 2)
      z = c;
  CHECK(q8.values[4][z] == Cyclotomic(-2L));

  const auto d8 = family_table(FamilyKind::Dihedral, 8);
  CHECK(verify(d8).passed);
  for (std::size_t r = 0; r < d8.num_rows(); ++r)
    CHECK(d8.row_is_rational(r));

  const auto c5 = family_table(FamilyKind::Cyclic, 5);
  CHECK(c5.values[1][1] == Cyclotomic::zeta(5, 1));
  CHECK(c5.values[2][3] == Cyclotomic::zeta(5, 6));

  for (long n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(verify(family_table(FamilyKind::Cyclic, n)).passed);
    if (n % 2 == 0)
      CHECK(verify(family_table(FamilyKind::Dihedral, n)).passed);
    if (n % 4 == 0 && n >= 8)
      CHECK(verify(family_table(FamilyKind::Quaternion, n)).passed);
  }
  CHECK_THROWS_AS((void)family_table(FamilyKind::Quaternion, 6), Error);
  CHECK_THROWS_AS((void)family_table(FamilyKind::Dihedral, 7), Error);
  CHECK(parse_family_kind("dihedral") == FamilyKind::Dihedral);
  CHECK_THROWS_AS((void)parse_family_kind("mystery"), Error);
}

TEST_CASE("induced characters") {
  const ClassTable s3(fixtures::group("s3"));
  const auto x = perm(3, {{0, 1, 2}});
  CHECK(induce_from_cyclic(s3, x, 0) == std::vector<Cyclotomic>{2L, 0L, 2L});
  CHECK(induce_from_cyclic(s3, x, 1) == std::vector<Cyclotomic>{2L, 0L, -1L});
  const auto reg = induce_from_cyclic(s3, Permutation::identity(3), 0);
  CHECK(reg == std::vector<Cyclotomic>{6L, 0L, 0L});

  // the sums that make the closed forms hold
  const ClassTable f21(fixtures::group("c7c3"));
  const auto y = perm(7, {{0, 1, 2, 3, 4, 5, 6}});
  for (long j = 0; j < 7; ++j) {
    const auto ind = induce_from_cyclic(f21, y, j);
    Cyclotomic s;
    for (long i = 1; i < 7; ++i)
      s += ind[f21.class_of(y.pow(i))];
    CHECK(s == Cyclotomic(j == 0 ? 3L * 6 : -3L));
  }
}

TEST_CASE("induced characters decompose into table rows") {
  for (const char *name : {"s3", "a4", "c7c3", "sl23", "d8"}) {
    CAPTURE(name);
    const auto &ctx = fixtures::context(name);
    for (const auto &cls : ctx.classes.classes()) {
      const auto &g = cls.representative;
      for (long j = 0; j < g.order(); ++j) {
        const auto ind = induce_from_cyclic(ctx.classes, g, j);
        for (std::size_t r = 0; r < ctx.table.num_rows(); ++r) {
          const auto ip = inner_product(ctx.classes, ind, ctx.row(r));
          REQUIRE(ip.is_rational());
          CHECK(is_integral(ip.as_rational()));
          CHECK(ip.as_rational() >= 0);
        }
      }
    }
  }
}

TEST_CASE("class matching") {
  const auto &s3 = fixtures::context("s3");
  CHECK(s3.matching.consistent_assignments == 1);
  CHECK(s3.matching.ambiguous_classes.empty());

  const auto &a7 = fixtures::context("a7");
  CHECK(a7.matching.consistent_assignments == 2);
  REQUIRE(a7.matching.ambiguous_classes.size() == 1);
  CHECK(a7.matching.ambiguous_classes[0].size() == 2);
  CHECK(a7.classes[a7.matching.ambiguous_classes[0][0]].element_order == 7);

  auto bad = fixtures::table("s3");
  bad.classes[1].size = 2;
  try {
    (void)match_classes(bad, ClassTable(fixtures::group("s3")));
    FAIL("expected NoConsistentMatch");
  } catch (const Error &e) {
    CHECK(e.kind() == "NoConsistentMatch");
  }
}

TEST_CASE("table power maps") {
  const auto a7 = fixtures::table("a7");
  CHECK(a7.power_map(2)[4] == 1);
  CHECK(a7.power_map(-1)[7] == 8);
  CHECK(a7.power_map(1) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto s3 = fixtures::table("s3");
  CHECK(s3.power_map(6) == std::vector<std::size_t>{0, 0, 0});
}
