#include <gtest/gtest.h>

#include "reebsym/decimal.hpp"
#include "reebsym/error.hpp"
#include "reebsym/permutation.hpp"

using reebsym::Decimal;
using reebsym::Error;
using reebsym::ErrorCode;
using reebsym::Permutation;
using reebsym::PermutationGroup;

TEST(Decimal, ParsesAndComparesExactly) {
  EXPECT_EQ(Decimal::parse("1.0"), Decimal::parse("1.00"));
  EXPECT_EQ(Decimal::parse("-0"), Decimal::parse("0"));
  EXPECT_LT(Decimal::parse("0.1"), Decimal::parse("0.10000000000000000001"));
  EXPECT_LT(Decimal::parse("-3"), Decimal::parse("-2.5"));
  EXPECT_GT(Decimal::parse("1e2"), Decimal::parse("99.99"));
}

TEST(Decimal, KeepsTheInputLiteral) {
  EXPECT_EQ(Decimal::parse("1.500").str(), "1.500");
  EXPECT_EQ(Decimal::parse("1.500").canonical(), "1.5");
  EXPECT_EQ((Decimal::parse("0.1") + Decimal::parse("0.2")).str(), "0.3");
}

TEST(Decimal, ArithmeticIsExact) {
  EXPECT_EQ(Decimal::parse("0.1") + Decimal::parse("0.2"), Decimal::parse("0.3"));
  EXPECT_EQ(Decimal::parse("1") - Decimal::parse("0.75"), Decimal::parse("0.25"));
  EXPECT_EQ(Decimal::parse("3").half(), Decimal::parse("1.5"));
  EXPECT_EQ(midpoint(Decimal::parse("-1"), Decimal::parse("2")), Decimal::parse("0.5"));
  EXPECT_EQ(Decimal::from_scaled(-25, 1), Decimal::parse("-2.5"));
  EXPECT_EQ((-Decimal::parse("2")).sign(), -1);
}

TEST(Decimal, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1.2.3", "abc", "1e", "0x10", " 1"}) EXPECT_FALSE(Decimal::try_parse(bad)) << bad;
  EXPECT_THROW(Decimal::parse("nan"), Error);
}

TEST(Permutation, ComposesRightToLeft) {
  const auto a = Permutation::from_cycles("(0 1)", 3);
  const auto b = Permutation::from_cycles("(1 2)", 3);
  // (a * b)(1) = a(b(1)) = a(2) = 2
  EXPECT_EQ((a * b)(1), 2);
  EXPECT_EQ((a * b).cycles(), "(0 1 2)");
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ((a * b) * (a * b).inverse(), Permutation::identity(3));
}

TEST(Permutation, CycleNotationRoundTrips) {
  const auto p = Permutation::from_cycles("(0 3)(1 2 4)", 6);
  EXPECT_EQ(p.cycles(), "(0 3)(1 2 4)");
  EXPECT_EQ(p.fixed_points(), std::vector<int>{5});
  EXPECT_EQ(Permutation::from_cycles("()", 4), Permutation::identity(4));
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_THROW(Permutation::from_cycles("(0 7)", 3), Error);
  EXPECT_THROW(Permutation::from_cycles("(0 1)(1 2)", 3), Error);
}

TEST(PermutationGroup, GeneratesSymmetricGroup) {
  const auto s3 = PermutationGroup::generate(3, {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)});
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_EQ(s3.elements().front(), Permutation::identity(3));
  const auto z3 = PermutationGroup::generate(3, {Permutation::from_cycles("(0 1 2)", 3)});
  EXPECT_EQ(z3.size(), 3u);
  EXPECT_TRUE(z3.is_subgroup_of(s3));
  EXPECT_FALSE(s3.is_subgroup_of(z3));
  EXPECT_EQ(z3.index_of(Permutation::from_cycles("(0 1)", 3)), -1);
}

TEST(PermutationGroup, HonoursTheSizeLimit) {
  try {
    PermutationGroup::generate(5, {Permutation::from_cycles("(0 1)", 5), Permutation::from_cycles("(0 1 2 3 4)", 5)}, 10);
    FAIL() << "expected SizeLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}
