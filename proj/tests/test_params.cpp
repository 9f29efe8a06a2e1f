#include <gtest/gtest.h>

#include "circulant/params.hpp"

namespace circulant {
namespace {

TEST(ValidateParams, AcceptsTheTenVertexExample) {
  const auto p = validate_params(10, 4);
  EXPECT_EQ(p.n(), 10);
  EXPECT_EQ(p.s(), 4);
}

TEST(ValidateParams, RejectsChordAboveHalf) {
  try {
    validate_params(10, 5);
    FAIL() << "expected ParamOutOfRange";
  } catch (const ParamOutOfRange& e) {
    EXPECT_EQ(e.which(), Param::s);
    EXPECT_EQ(e.value(), 5);
  }
}

TEST(ValidateParams, RejectsSmallN) {
  try {
    validate_params(4, 2);
    FAIL() << "expected ParamOutOfRange";
  } catch (const ParamOutOfRange& e) {
    EXPECT_EQ(e.which(), Param::n);
  }
}

TEST(ValidateParams, Boundaries) {
  EXPECT_NO_THROW(validate_params(5, 2));
  EXPECT_THROW(validate_params(20, 1), ParamOutOfRange);
  EXPECT_NO_THROW(validate_params(20, 9));
  EXPECT_THROW(validate_params(20, 10), ParamOutOfRange);
  EXPECT_NO_THROW(validate_params(21, 10));
  EXPECT_THROW(validate_params(-7, 2), ParamOutOfRange);
  EXPECT_NO_THROW(validate_params(kMaxVertices, 997));
  EXPECT_THROW(validate_params(kMaxVertices + 1, 997), ParamOutOfRange);
}

TEST(ValidateParams, AcceptanceMatchesRangeExactly) {
  for (Int n = -3; n <= 40; ++n) {
    for (Int s = -2; s <= 25; ++s) {
      const bool ok = n >= 5 && s >= 2 && s <= (n - 1) / 2;
      bool accepted = true;
      try {
        validate_params(n, s);
      } catch (const ParamOutOfRange&) {
        accepted = false;
      }
      EXPECT_EQ(accepted, ok) << "n=" << n << " s=" << s;
    }
  }
}

TEST(Decompose, GammaZero) {
  const auto ctx = decompose(validate_params(12, 3));
  EXPECT_EQ(ctx.lambda, 4);
  EXPECT_EQ(ctx.gamma, 0);
  EXPECT_EQ(ctx.g, 3);
  EXPECT_FALSE(ctx.a);
  EXPECT_FALSE(ctx.b);
  EXPECT_FALSE(ctx.terms);
}

TEST(Decompose, FullTerms) {
  const auto ctx = decompose(validate_params(14, 5));
  EXPECT_EQ(ctx.lambda, 2);
  EXPECT_EQ(ctx.gamma, 4);
  EXPECT_EQ(ctx.g, 1);
  EXPECT_EQ(ctx.a, 1);
  EXPECT_EQ(ctx.b, 1);
  ASSERT_TRUE(ctx.terms);
  EXPECT_EQ(*ctx.terms, (LambdaGammaTerms{3, 4, 3, 2, 3}));
}

TEST(Decompose, ZeroRemainderOfChordLeavesTermsAbsent) {
  const auto ctx = decompose(validate_params(10, 4));
  EXPECT_EQ(ctx.lambda, 2);
  EXPECT_EQ(ctx.gamma, 2);
  EXPECT_EQ(ctx.g, 2);
  EXPECT_EQ(ctx.a, 2);
  EXPECT_EQ(ctx.b, 0);
  EXPECT_FALSE(ctx.terms);
}

TEST(Decompose, InvariantsOverGrid) {
  for (Int n = 5; n <= 300; ++n) {
    for (Int s = 2; s <= (n - 1) / 2; ++s) {
      const auto p = validate_params(n, s);
      const auto ctx = decompose(p);
      ASSERT_EQ(n, ctx.lambda * s + ctx.gamma);
      ASSERT_GE(ctx.gamma, 0);
      ASSERT_LT(ctx.gamma, s);
      ASSERT_EQ(n % ctx.g, 0);
      ASSERT_EQ(s % ctx.g, 0);
      ASSERT_EQ(ctx.a.has_value(), ctx.gamma > 0);
      if (ctx.a) {
        ASSERT_EQ(s, *ctx.a * ctx.gamma + *ctx.b);
        ASSERT_GE(*ctx.b, 0);
        ASSERT_LT(*ctx.b, ctx.gamma);
        ASSERT_EQ(ctx.terms.has_value(), *ctx.b > 0);
      }
      if (ctx.terms) {
        const auto& t = *ctx.terms;
        ASSERT_EQ(t.e1, std::min(std::max(t.p1, t.p3), std::max(t.p0, t.p2)));
      }
      ASSERT_EQ(decompose(p), ctx);
    }
  }
}

TEST(IntegerHelpers, FloorAndCeilDivision) {
  EXPECT_EQ(detail::floor_div(7, 2), 3);
  EXPECT_EQ(detail::floor_div(-7, 2), -4);
  EXPECT_EQ(detail::ceil_div(7, 2), 4);
  EXPECT_EQ(detail::ceil_div(-7, 2), -3);
  EXPECT_EQ(detail::ceil_div(0, 4), 0);
  EXPECT_EQ(detail::mod(-3, 10), 7);
}

}  // namespace
}  // namespace circulant
