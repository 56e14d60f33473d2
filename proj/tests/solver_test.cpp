#include <random>

#include <gtest/gtest.h>

#include "adomian/error.hpp"
#include "adomian/solver.hpp"
#include "support/oracles.hpp"

namespace adomian {
namespace {

TEST(UniPolyTest, FormatAndParse) {
  UniPoly p({Rational(1), Rational(-1), Rational(1, 2)});
  EXPECT_EQ(p.to_string(), "1 - x + 1/2*x^2");
  EXPECT_EQ(UniPoly::parse("1 - x + 1/2*x^2"), p);
  EXPECT_EQ(UniPoly::parse("1/2*x^2 + 1 - x"), p);
  EXPECT_EQ(UniPoly().to_string(), "0");
  EXPECT_EQ(UniPoly::parse("0"), UniPoly());
  EXPECT_EQ(UniPoly::parse("-3*x^4").to_string(), "-3*x^4");
  EXPECT_EQ(UniPoly::parse("x - x"), UniPoly());
  EXPECT_THROW(UniPoly::parse("1 +"), ParseError);
  EXPECT_THROW(UniPoly::parse("2*y"), ParseError);
  EXPECT_THROW(UniPoly::parse(""), ParseError);
}

TEST(UniPolyTest, Calculus) {
  UniPoly p = UniPoly::parse("3 + 2*x + 3*x^2");
  EXPECT_EQ(p.integrate(), UniPoly::parse("3*x + x^2 + x^3"));
  EXPECT_EQ(p.integrate().derivative(), p);
  EXPECT_EQ(p.eval(Rational(2)), Rational(19));
  EXPECT_EQ(UniPoly::parse("1 + x").pow(3), UniPoly::parse("1 + 3*x + 3*x^2 + x^3"));
}

SeriesSolution run(Rational a, Rational c, unsigned power, const char* g, Rational u0, unsigned depth) {
  IVProblem p;
  p.a = a;
  p.c = c;
  p.power = power;
  p.g = UniPoly::parse(g);
  p.u0 = u0;
  p.depth = depth;
  return solve(p);
}

TEST(SolverTest, QuadraticGrowthGivesGeometricComponents) {
  SeriesSolution s = run(0, 1, 2, "0", 1, 5);
  ASSERT_EQ(s.components.size(), 6U);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(s.components[k], UniPoly::monomial(k)) << k;
  EXPECT_EQ(partial_sum(s, 3).to_string(), "1 + x + x^2 + x^3");
}

TEST(SolverTest, LinearDecayGivesExponentialSeries) {
  SeriesSolution s = run(-1, 0, 2, "0", 1, 4);
  EXPECT_EQ(partial_sum(s, 2).to_string(), "1 - x + 1/2*x^2");
  EXPECT_EQ(s.components[4], UniPoly::monomial(4, Rational(1, 24)));
}

TEST(SolverTest, QuadraticDecayAlternates) {
  SeriesSolution s = run(0, -1, 2, "0", 1, 3);
  EXPECT_EQ(partial_sum(s, 3).to_string(), "1 - x + x^2 - x^3");
}

TEST(SolverTest, ZeroProblemStaysZero) {
  SeriesSolution s = run(0, 1, 3, "0", 0, 4);
  for (const UniPoly& c : s.components) EXPECT_TRUE(c.is_zero());
}

TEST(SolverTest, DepthAndPowerValidated) {
  SeriesSolution s = run(0, 1, 2, "0", 1, 2);
  EXPECT_THROW(partial_sum(s, 3), InvalidArgument);
  EXPECT_THROW(run(0, 1, 0, "0", 1, 2), InvalidArgument);
  EXPECT_THROW(run(0, 1, 2, "0", 1, 0), InvalidArgument);
}

// The partial sum S_K satisfies the ODE up to x^(K-1): every coefficient of
// S' - a*S - c*S^N - g below degree K vanishes.
TEST(SolverTest, ResidualVanishesBelowDepth) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<unsigned> power(1, 4);
  std::uniform_int_distribution<unsigned> depth(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    IVProblem p;
    p.a = testing::random_rational(rng);
    p.c = testing::random_rational(rng);
    p.power = power(rng);
    p.g = UniPoly({testing::random_rational(rng), testing::random_rational(rng)});
    p.u0 = testing::random_rational(rng);
    p.depth = depth(rng);
    SeriesSolution s = solve(p);
    UniPoly sum = partial_sum(s, p.depth);
    UniPoly residual = sum.derivative() - sum * p.a - sum.pow(p.power) * p.c - p.g;
    for (std::size_t j = 0; j < p.depth; ++j) {
      ASSERT_TRUE(residual.coeff(j).is_zero()) << "trial " << trial << " degree " << j << ": " << residual.to_string();
    }
  }
}

}  // namespace
}  // namespace adomian
