#include <gtest/gtest.h>

#include <bsforge/hf_geometry.hpp>

using namespace bsforge;

namespace {

FactoredPoly product(std::initializer_list<AffineFactor> fs) {
  FactoredPoly p;
  p.factors = fs;
  return p;
}

}  // namespace

TEST(Arrangement, PurePair2332) {
  auto arr = hf_arrangement(2, 3, 3, 2);
  ASSERT_EQ(arr.size(), 4u);
  EXPECT_TRUE(arr.contains({1, 0, 0}));
  EXPECT_TRUE(arr.contains({0, 1, 0}));
  EXPECT_TRUE(arr.contains({3, 2, 0}));
  EXPECT_TRUE(arr.contains({2, 3, 0}));
  EXPECT_FALSE(arr.contains({1, 1, 0}));
  EXPECT_EQ(arr.render(), "{s1, s2, 3*s1+2*s2, 2*s1+3*s2}");
}

TEST(Arrangement, ASmallerThanTwo) {
  for (int b = 3; b <= 6; ++b) {
    auto arr = hf_arrangement(1, b, 3, 2);
    EXPECT_TRUE(arr.contains({Rational(b), 2, 0}));
    EXPECT_TRUE(arr.contains({2, 6, 0}));
  }
}

TEST(Arrangement, Preconditions) {
  EXPECT_THROW(hf_arrangement(2, 2, 2, 2), Error);  // bc = ad
  EXPECT_THROW(hf_arrangement(1, 3, 3, 1), Error);  // a = d = 1
  EXPECT_THROW(hf_arrangement(0, 3, 3, 2), Error);
}

TEST(Arrangement, SwapSymmetry) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        for (int d = 1; d <= 4; ++d) {
          if (b * c <= a * d || (a < 2 && d < 2)) continue;
          auto x = hf_arrangement(a, b, c, d), y = hf_arrangement(d, c, b, a);
          ASSERT_EQ(x.size(), y.size());
          for (const auto& l : x.lines) EXPECT_TRUE(y.contains({l.c2, l.c1, 0}));
        }
}

TEST(Arrangement, MatchesFinalPartOfCandidate) {
  auto [f1, f2] = binomial_pair(2, 3, 3, 2);
  auto cand = bs_candidate(f1, f2, WeightSystem(3, 2), WeightSystem(2, 3));
  EXPECT_TRUE(contains_arrangement(final_part(cand), hf_arrangement(2, 3, 3, 2)));
}

TEST(Arrangement, ContainmentIsEquality) {
  auto arr = hf_arrangement(2, 3, 3, 2);
  EXPECT_FALSE(contains_arrangement(product({{1, 0, 0}, {0, 1, 0}}), arr));
  EXPECT_FALSE(contains_arrangement(product({{1, 0, 0}, {0, 1, 0}, {6, 4, 0}, {4, 6, 0}, {1, 1, 0}}), arr));
  EXPECT_TRUE(contains_arrangement(product({{2, 0, 0}, {0, 1, 0}, {6, 4, 0}, {6, 4, 0}, {4, 6, 0}}), arr));
}

TEST(Witness, Case1Example) {
  // 6 s1 + 4 s2 = 0
  for (double n : {1e2, 1e4, 1e6}) {
    auto w = witness_sequence(2, 3, 3, 2, 1, Rational(-3, 2), n);
    EXPECT_EQ(w.case_id, 1);
    EXPECT_EQ(w.xi2, Complex(0));
    EXPECT_NEAR(w.s1.real(), 1 + 1 / n, 1e-12);
    EXPECT_LT(on_variety_error(w, 2, 3, 3, 2), 1e-9);
  }
  auto w = witness_sequence(2, 3, 3, 2, 1, Rational(-3, 2), 1e6);
  EXPECT_LE(convergence_error(w, 1, Rational(-3, 2)), 1e-6);
}

TEST(Witness, SecondLineBySymmetry) {
  // 4 s1 + 6 s2 = 0
  auto w = witness_sequence(2, 3, 3, 2, Rational(-3, 2), 1, 1e6);
  EXPECT_TRUE(w.swapped);
  EXPECT_EQ(w.xi1, Complex(0));
  EXPECT_LT(on_variety_error(w, 2, 3, 3, 2), 1e-9);
  EXPECT_LE(convergence_error(w, Rational(-3, 2), 1), 1e-6);
}

TEST(Witness, CauchyConvergence) {
  double prev = 1;
  for (int k = 2; k <= 6; ++k) {
    auto w = witness_sequence(2, 3, 3, 2, 2, -3, std::pow(10.0, k));
    double e = convergence_error(w, 2, -3);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Witness, BoundarySubcaseHasConstantCorrection) {
  // bc - ad + d - b = 0 for (a,b,c,d) = (1,3,1,2)
  // so xi1(n) = a s1 - (b/d) c s1 x2^-d x1^(c-1) does not move with n
  auto first = witness_sequence(1, 3, 1, 2, 2, -3, 10.0);
  for (double n : {10.0, 1e3, 1e5}) {
    auto w = witness_sequence(1, 3, 1, 2, 2, -3, n);
    EXPECT_EQ(w.case_id, 1);
    EXPECT_NEAR(w.xi1.real(), first.xi1.real(), 1e-9);
    EXPECT_GT(std::abs(w.xi1.real() - 2.0), 1.0);  // a s1 = 2
    EXPECT_LT(on_variety_error(w, 1, 3, 1, 2), 1e-9);
  }
}

TEST(Witness, Case2) {
  // (3,5,2,3): bc - ad = 1, bc - ad + d - b = -1
  Rational a = 3, b = 5, c = 2, d = 3;
  Rational s1 = 3, s2 = -5;  // b s1 + d s2 = 0
  for (double n : {1e2, 1e4, 1e6}) {
    auto w = witness_sequence(a, b, c, d, s1, s2, n);
    EXPECT_EQ(w.case_id, 2);
    EXPECT_LT(on_variety_error(w, a, b, c, d), 1e-9);
  }
  EXPECT_LE(convergence_error(witness_sequence(a, b, c, d, s1, s2, 1e6), s1, s2), 1e-6);
}

TEST(Witness, Rejections) {
  EXPECT_THROW(witness_sequence(2, 3, 3, 2, 0, 0, 10), Error);
  EXPECT_THROW(witness_sequence(2, 3, 3, 2, 1, 1, 10), Error);
}
