#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "zgu/help.hpp"

using namespace zgu;

namespace {

PAVector pav(const ClassTable &C, std::initializer_list<std::pair<const char *, long>> entries) {
  PAVector v(C.size());
  for (const auto &[name, e] : entries)
    v.at(C.class_by_name(name)) = e;
  return v;
}

bool contains_u1(const AdmissibleSet &set, const PAVector &u) {
  return std::any_of(set.candidates.begin(), set.candidates.end(),
                     [&](const TorsionUnitCandidate &c) { return c.power(1) == u; });
}

} // namespace

TEST_CASE("multiplicities: C4 and a faithful linear character") {
  const auto ctx = GroupContext::make(fixtures::cyclic(4), family_table(FamilyKind::Cyclic, 4));
  const auto &g = ctx.classes.group().generators().front();
  const auto mv = multiplicities(delta_tower(ctx.classes, g), ctx.table, ctx.matching);
  CHECK(mv.admissible());
  // principal row
  CHECK(mv.mu[0] == std::vector<Rational>{1, 0, 0, 0});
  // the faithful characters see g with eigenvalue zeta_4^{+-1}
  for (std::size_t r : {std::size_t{1}, std::size_t{3}}) {
    Rational ones = 0;
    for (long l = 0; l < 4; ++l)
      ones += mv.mu[r][static_cast<std::size_t>(l)];
    CHECK(ones == 1);
    CHECK(mv.mu[r][0] == 0);
    CHECK(mv.mu[r][2] == 0);
  }
}

TEST_CASE("multiplicities: A7 order 4 with (2,-1)") {
  const auto &ctx = fixtures::context("a7");
  TorsionUnitCandidate u;
  u.order = 4;
  u.pav_by_divisor[1] = pav(ctx.classes, {{"2a", 2}, {"4a", -1}});
  u.pav_by_divisor[2] = pav(ctx.classes, {{"2a", 1}});
  const auto mv = multiplicities(u, ctx.table, ctx.matching);
  CHECK(mv.mu[1] == std::vector<Rational>{4, 1, 0, 1});
  CHECK(mv.mu[0] == std::vector<Rational>{1, 0, 0, 0});
  for (std::size_t r = 0; r < ctx.table.num_rows(); ++r) {
    Rational s;
    for (const auto &m : mv.mu[r])
      s += m;
    CHECK(s == ctx.table.degree(r));
  }
  CHECK(mv.admissible());
}

TEST_CASE("enumeration examples") {
  const auto &a7 = fixtures::context("a7");
  HelpSolver solver(a7);
  const auto &two = solver.admissible(2);
  REQUIRE(two.candidates.size() == 1);
  CHECK(two.candidates[0].power(1) == pav(a7.classes, {{"2a", 1}}));
  CHECK(two.complete);

  const auto &four = solver.admissible(4);
  CHECK(contains_u1(four, pav(a7.classes, {{"4a", 1}})));
  CHECK(contains_u1(four, pav(a7.classes, {{"2a", 2}, {"4a", -1}})));
  CHECK(four.galois_closed);
  CHECK(four.complete);
  CHECK(std::is_sorted(four.candidates.begin(), four.candidates.end()));

  const auto &s3 = fixtures::context("s3");
  CHECK(enumerate_admissible(s3, 6).candidates.empty());
  CHECK(enumerate_admissible(s3, 5).candidates.empty());
  CHECK(enumerate_admissible(s3, 1).candidates.size() == 1);
}

TEST_CASE("element towers are admissible") {
  for (const char *name : fixtures::kBundled) {
    CAPTURE(name);
    const auto &ctx = fixtures::context(name);
    HelpSolver solver(ctx);
    for (const auto &cls : ctx.classes.classes()) {
      const auto tower = delta_tower(ctx.classes, cls.representative);
      const auto &set = solver.admissible(cls.element_order);
      CHECK(std::find(set.candidates.begin(), set.candidates.end(), tower) != set.candidates.end());
    }
  }
}

TEST_CASE("monotone in the box bound") {
  const auto &ctx = fixtures::context("a7");
  const auto small = enumerate_admissible(ctx, 4, 2);
  const auto large = enumerate_admissible(ctx, 4, 10);
  for (const auto &c : small.candidates)
    CHECK(std::find(large.candidates.begin(), large.candidates.end(), c) != large.candidates.end());
  // a box of radius 1 cannot hold (2,-1)
  const auto tiny = enumerate_admissible(ctx, 4, 1);
  CHECK_FALSE(contains_u1(tiny, pav(ctx.classes, {{"2a", 2}, {"4a", -1}})));
  CHECK_FALSE(tiny.complete);
}
