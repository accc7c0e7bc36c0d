#include <gtest/gtest.h>

#include <bsforge/division.hpp>

using namespace bsforge;

namespace {

SparsePoly binomial(std::uint32_t a, std::uint32_t b, bool first) {
  return first ? SparsePoly{{{a, 0}, 1}, {{0, b}, 1}} : SparsePoly{{{b, 0}, 1}, {{0, a}, 1}};
}

}  // namespace

TEST(Partition, SingleDivisor) {
  DeltaPartition p({{2, 0}});
  EXPECT_EQ(p.region_of({3, 7}), 0u);
  EXPECT_TRUE(p.in_complement({1, 100}));
  EXPECT_FALSE(p.complement_is_finite());
  EXPECT_THROW(p.complement(), Error);
}

TEST(Partition, PureCaseComplement) {
  auto p = partition({{2, 0}, {0, 2}});
  EXPECT_EQ(p.complement(), (std::vector<ExponentPair>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  auto q = partition({{2, 0}, {1, 1}, {0, 4}});
  EXPECT_TRUE(q.complement_is_finite());
  EXPECT_EQ(q.complement().size(), 5u);
}

TEST(Partition, RegionsAreFirstMatch) {
  auto p = partition({{2, 0}, {1, 1}});
  EXPECT_EQ(p.region_of({2, 1}), 0u);
  EXPECT_EQ(p.region_of({1, 3}), 1u);
}

TEST(Divide, PureSFunctionIsExactInTwoSteps) {
  // a, b, c, d = 2, 3, 3, 2
  SparsePoly f1 = binomial(2, 3, true), f2 = binomial(3, 2, true);
  LocalOrder o1{WeightSystem(3, 2), TieBreak::PreferLowJ};
  SparsePoly s = SparsePoly::x2(2) * f1 - SparsePoly::x1(2) * f2;
  EXPECT_EQ(s, SparsePoly::x2(5) - SparsePoly::x1(5));
  auto r = divide(s, {f1, f2}, o1, DivisionOptions{});
  EXPECT_EQ(r.status, DivisionStatus::Exact);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.steps, 2u);
  EXPECT_EQ(reconstruct(r, {f1, f2}), s);
}

TEST(Divide, ZeroDividend) {
  LocalOrder o{WeightSystem(1, 1), TieBreak::PreferLowJ};
  auto r = divide(SparsePoly(), {SparsePoly::x1()}, o, DivisionOptions{});
  EXPECT_EQ(r.status, DivisionStatus::Exact);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_TRUE(r.quotients[0].is_zero());
}

TEST(Divide, ComplementMonomialIsRemainder) {
  SparsePoly f1 = binomial(2, 3, true), f2 = binomial(3, 2, true);
  LocalOrder o1{WeightSystem(3, 2), TieBreak::PreferLowJ};
  auto r = divide(SparsePoly::monomial({1, 1}), {f1, f2}, o1, DivisionOptions{});
  EXPECT_EQ(r.status, DivisionStatus::Exact);
  EXPECT_EQ(r.remainder, SparsePoly::monomial({1, 1}));
}

TEST(Divide, InfiniteDivisionNeedsCap) {
  // x1 divided by x1 - x1^2: the quotient is a geometric series
  SparsePoly g = SparsePoly::x1() - SparsePoly::x1(2);
  LocalOrder o{WeightSystem(1, 1), TieBreak::PreferLowJ};
  DivisionOptions opts;
  opts.step_budget = 100;
  EXPECT_THROW(divide(SparsePoly::x1(), {g}, o, opts), Error);
  auto r = divide(SparsePoly::x1(), {g}, o, std::optional<Rational>(10));
  EXPECT_EQ(r.status, DivisionStatus::Truncated);
  EXPECT_EQ(r.quotients[0].size(), 10u);
  // identity holds modulo weight > 10
  EXPECT_EQ(reconstruct(r, {g}) + r.leftover, SparsePoly::x1());
}

TEST(Divide, CertifiedZeroExit) {
  SparsePoly g1 = SparsePoly::x1() - SparsePoly::x1(2);
  SparsePoly g2 = SparsePoly::x2();
  LocalOrder o{WeightSystem(1, 1), TieBreak::PreferLowJ};
  DivisionOptions opts;
  opts.certify_after = 0;
  auto r = divide(SparsePoly::x1(3), {g1, g2}, o, opts);
  EXPECT_EQ(r.status, DivisionStatus::CertifiedZero);
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Divide, UnitDivisorCertifiesZero) {
  SparsePoly unit = SparsePoly::constant(1) + SparsePoly::x1(1) * Rational(4) - SparsePoly::x2() * Rational(2);
  LocalOrder o{WeightSystem(2, 1), TieBreak::PreferLowJ};
  DivisionOptions opts;
  opts.certify_after = 8;
  opts.step_budget = 1000;
  auto r = divide(SparsePoly::x1(2) + SparsePoly::x2(3), {unit}, o, opts);
  EXPECT_EQ(r.status, DivisionStatus::CertifiedZero);
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Divide, Deterministic) {
  SparsePoly f1 = binomial(2, 3, true), f2 = binomial(3, 2, true);
  LocalOrder o1{WeightSystem(3, 2), TieBreak::PreferLowJ};
  SparsePoly u{{{4, 1}, 3}, {{1, 5}, -2}, {{0, 0}, 1}};
  auto r1 = divide(u, {f1, f2}, o1, std::optional<Rational>(30));
  auto r2 = divide(u, {f1, f2}, o1, std::optional<Rational>(30));
  EXPECT_EQ(r1.quotients, r2.quotients);
  EXPECT_EQ(r1.remainder, r2.remainder);
  EXPECT_EQ(r1.steps, r2.steps);
}
