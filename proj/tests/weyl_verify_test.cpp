#include <gtest/gtest.h>

#include <random>

#include <bsforge/weyl_verify.hpp>

using namespace bsforge;

namespace {

struct Pair {
  SparsePoly f1, f2;
  WeightSystem a1, a2;
};

Pair ex1() { return {SparsePoly::x1(), SparsePoly::x1(3) + SparsePoly::x2(2), WeightSystem(2, 1), WeightSystem(2, 3)}; }

Pair ex3() {
  auto [f1, f2] = binomial_pair(2, 3, 3, 2);
  return {f1, f2, WeightSystem(3, 2), WeightSystem(2, 3)};
}

Pair smooth() { return {SparsePoly::x1(), SparsePoly::x2(), WeightSystem(1, 1), WeightSystem(1, 2)}; }

// Expands P xi_g as a module element.
ModuleElement act(const XiExpression& e, const PairDerivatives& pd) {
  ModuleElement out;
  for (const auto& [g, P] : e.grid()) out += apply(P, ModuleElement::xi(g.first, g.second), pd);
  return out;
}

bool same(const ModuleElement& x, const ModuleElement& y, const PairDerivatives& pd) {
  ModuleElement d = x;
  d -= y;
  return common_shift(d, pd).second.is_zero();
}

SparsePoly random_poly(std::mt19937& rng, int terms, unsigned deg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> ex(0, deg);
  SparsePoly p;
  for (int t = 0; t < terms; ++t) p.add_term({ex(rng), ex(rng)}, coef(rng));
  return p;
}

}  // namespace

TEST(WeylOperator, CommutatorOfD1AndX1) {
  // x1 d1 = d1 x1 - 1 in right normal form
  WeylOperator P = weyl_multiply(WeylOperator::coefficient(SparsePoly::x1()), WeylOperator::d(1));
  WeylOperator want;
  want.add({1, 0, 0, 0}, SparsePoly::x1());
  want.add({}, SparsePoly::constant(-1));
  EXPECT_EQ(P, want);
}

TEST(WeylOperator, MultiplyMatchesComposedAction) {
  std::mt19937 rng(7);
  auto p = ex3();
  PairDerivatives pd(p.f1, p.f2);
  for (int trial = 0; trial < 20; ++trial) {
    WeylOperator A, B;
    A.add({std::uint32_t(trial % 2), std::uint32_t(trial % 3 == 0), 0, 1}, random_poly(rng, 3, 2));
    B.add({1, std::uint32_t(trial % 2), 1, 0}, random_poly(rng, 3, 2));
    B.add({}, random_poly(rng, 2, 2));
    auto el = ModuleElement::xi(0, 1);
    EXPECT_TRUE(same(apply(weyl_multiply(A, B), el, pd), apply(A, apply(B, el, pd), pd), pd));
  }
}

TEST(WeylOperator, ShiftedChiDiffersByConstant) {
  // chi~ - chi = w1 + w2 on a test function.
  WeylOperator chit, chi;
  chit.add({1, 0, 0, 0}, SparsePoly::x1() * Rational(2));
  chit.add({0, 1, 0, 0}, SparsePoly::x2());
  chi = weyl_multiply(WeylOperator::coefficient(SparsePoly::x1() * Rational(2)), WeylOperator::d(1)) +
        weyl_multiply(WeylOperator::coefficient(SparsePoly::x2()), WeylOperator::d(2));
  EXPECT_EQ(chit - chi, WeylOperator::coefficient(SparsePoly::constant(3)));
}

TEST(ModuleAction, SmoothPairIdentity) {
  // (s1+1)(s2+1) x1^s1 x2^s2 = d1 d2 x1^(s1+1) x2^(s2+1)
  auto p = smooth();
  PairDerivatives pd(p.f1, p.f2);
  WeylOperator P;
  P.add({1, 1, 0, 0}, SparsePoly::constant(1));
  auto lhs = apply(P, ModuleElement::xi(-1, -1), pd);
  SparsePoly b = AffineFactor{1, 0, 1}.as_poly() * AffineFactor{0, 1, 1}.as_poly();
  EXPECT_TRUE(same(lhs, ModuleElement({0, 0}, Poly4::from_s(b)), pd));
}

class RaisingIdentity : public ::testing::TestWithParam<int> {};

// The raised expression equals factor * u xi_g on the symbol.
TEST_P(RaisingIdentity, RandomCoefficients) {
  std::mt19937 rng(100 + GetParam());
  for (const auto& p : {ex1(), ex3()}) {
    PairContext ctx(p.f1, p.f2, p.a1, p.a2);
    PairDerivatives pd(p.f1, p.f2);
    for (int i1 = 0; i1 <= 1; ++i1)
      for (int i2 = 0; i2 <= 1; ++i2)
        for (int which = 1; which <= 2; ++which) {
          SparsePoly u = random_poly(rng, 4, 3);
          if (u.is_zero()) continue;
          auto rr = apply_chi_tilde(which, u, {i1, i2}, ctx);
          auto xi = ModuleElement::xi(i1, i2);
          auto scaled = apply(WeylOperator::coefficient(u), xi, pd).times(Poly4::from_s(rr.factor.as_poly()));
          EXPECT_TRUE(same(act(rr.expr, pd), scaled, pd)) << "which=" << which << " g=(" << i1 << "," << i2 << ")";
        }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RaisingIdentity, ::testing::Range(0, 5));

TEST(Pipeline, Example1IsExact) {
  auto p = ex1();
  auto cert = functional_equation(p.f1, p.f2, p.a1, p.a2);
  EXPECT_EQ(cert.residual.kind, VerifyResult::Kind::Zero);
  EXPECT_EQ(cert.trace.dropped_terms, 0u);

  PairContext ctx(p.f1, p.f2, p.a1, p.a2);
  WeylOperator mutated = cert.op;
  mutated.add({}, SparsePoly::constant(1));
  auto r = verify_identity(cert.candidate.expand(), mutated, ctx);
  EXPECT_EQ(r.kind, VerifyResult::Kind::Nonzero);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Pipeline, Example1WithCapStaysExact) {
  auto p = ex1();
  PipelineOptions opts;
  opts.cap = Rational(30);
  auto cert = functional_equation(p.f1, p.f2, p.a1, p.a2, opts);
  EXPECT_TRUE(cert.residual.ok());
}

TEST(Pipeline, WrongCandidateIsRejected) {
  // Dropping a factor from b makes the identity fail.
  auto p = ex1();
  auto cert = functional_equation(p.f1, p.f2, p.a1, p.a2);
  PairContext ctx(p.f1, p.f2, p.a1, p.a2);
  auto f = cert.candidate.factored();
  f.factors.pop_back();
  EXPECT_EQ(verify_identity(f.expand(), cert.op, ctx).kind, VerifyResult::Kind::Nonzero);
}

TEST(Pipeline, SmoothBranch) {
  auto p = smooth();
  auto cert = functional_equation(p.f1, p.f2, p.a1, p.a2);
  EXPECT_TRUE(cert.candidate.smooth);
  EXPECT_EQ(cert.residual.kind, VerifyResult::Kind::Zero);
  WeylOperator want;
  want.add({1, 1, 0, 0}, SparsePoly::constant(1));
  EXPECT_EQ(cert.op, want);
}

