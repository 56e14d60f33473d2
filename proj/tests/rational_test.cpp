#include <limits>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "adomian/error.hpp"
#include "adomian/rational.hpp"

namespace adomian {
namespace {

TEST(RationalTest, NormalizesOnConstruction) {
  Rational r(6, -8);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_EQ(Rational(0, -5).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational(0));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
  EXPECT_EQ(Rational(-2).pow(3), Rational(-8));
  EXPECT_EQ(Rational(1, 2).pow(0), Rational(1));
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
}

TEST(RationalTest, OverflowSpillsToBigAndBack) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational r(big);
  Rational sum = r + Rational(1);
  EXPECT_EQ(sum.to_string(), "9223372036854775808");
  EXPECT_FALSE(sum == r);
  Rational back = sum - Rational(1);
  EXPECT_EQ(back, r);  // demoted to the inline form, so structural equality holds

  Rational min(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-min).to_string(), "9223372036854775808");
  EXPECT_EQ(-(-min), min);

  Rational product = Rational(big) * Rational(big);
  EXPECT_EQ(product.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
  EXPECT_EQ(product / Rational(big), Rational(big));
}

TEST(RationalTest, BigValuesSurviveCopyAndMove) {
  Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(3, 7);
  const std::string text = big.to_string();
  Rational copy = big;
  EXPECT_EQ(copy, big);
  Rational moved = std::move(copy);
  EXPECT_EQ(moved.to_string(), text);
  EXPECT_TRUE(copy.is_zero());  // NOLINT(bugprone-use-after-move)

  Rational target(5);
  target = big;
  EXPECT_EQ(target.to_string(), text);
  target = Rational(2);
  EXPECT_EQ(target, Rational(2));
  target = std::move(moved);
  EXPECT_EQ(target.to_string(), text);
  target = target;  // NOLINT(misc-redundant-expression)
  EXPECT_EQ(target.to_string(), text);

  Rational acc = big;
  acc += Rational(1);
  acc -= Rational(1);
  EXPECT_EQ(acc, big);
  EXPECT_EQ(sizeof(Rational), 16U);
}

TEST(RationalTest, MatchesGmpOnRandomMixedMagnitudes) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> any(std::numeric_limits<std::int64_t>::min() / 2,
                                                  std::numeric_limits<std::int64_t>::max() / 2);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = i % 2 ? any(rng) : small(rng);
    std::int64_t b = any(rng) | 1;
    std::int64_t c = i % 3 ? any(rng) : small(rng);
    std::int64_t d = small(rng);
    if (d == 0) d = 7;
    Rational x(a, b);
    Rational y(c, d);
    mpq_class qx = x.to_mpq();
    mpq_class qy = y.to_mpq();
    EXPECT_EQ((x + y).to_mpq(), mpq_class(qx + qy));
    EXPECT_EQ((x - y).to_mpq(), mpq_class(qx - qy));
    EXPECT_EQ((x * y).to_mpq(), mpq_class(qx * qy));
    if (!y.is_zero()) EXPECT_EQ((x / y).to_mpq(), mpq_class(qx / qy));
    EXPECT_EQ(x < y, qx < qy);
  }
}

}  // namespace
}  // namespace adomian
