#include <random>
#include <string>

#include <gtest/gtest.h>

#include "adomian/adomian_matrix.hpp"
#include "adomian/convolution.hpp"
#include "adomian/error.hpp"
#include "adomian/reference.hpp"
#include "adomian/unipoly.hpp"
#include "support/oracles.hpp"

namespace adomian {
namespace {

PolyGrid line_of(std::initializer_list<const char*> entries) {
  PolyGrid g = PolyGrid::line(entries.size());
  std::size_t k = 0;
  for (const char* e : entries) g.at(k++) = poly_parse(e);
  return g;
}

std::vector<std::string> formatted(const PolyGrid& g) {
  std::vector<std::string> out;
  for (const auto& p : g.entries()) out.push_back(poly_format(p));
  return out;
}

TEST(ConvStep1dTest, SquareOfComponents) {
  PolyGrid u = component_grid_1d(3);
  EXPECT_EQ(formatted(conv_step_1d(u, u)),
            (std::vector<std::string>{"u[0]^2", "2*u[0]*u[1]", "u[1]^2 + 2*u[0]*u[2]"}));
}

TEST(ConvStep1dTest, IdentitySeries) {
  PolyGrid u = component_grid_1d(3);
  PolyGrid one = line_of({"1", "0", "0"});
  EXPECT_EQ(conv_step_1d(u, one), u);
  EXPECT_EQ(conv_step_1d(one, u), u);
}

TEST(ConvStep1dTest, TwoFamilies) {
  PolyGrid u = component_grid_1d(2);
  PolyGrid v = component_grid_1d(2, 'v');
  EXPECT_EQ(formatted(conv_step_1d(u, v)), (std::vector<std::string>{"u[0]*v[0]", "u[1]*v[0] + u[0]*v[1]"}));
}

TEST(ConvStep1dTest, InputsUnmodifiedAndShapeChecked) {
  PolyGrid u = component_grid_1d(4);
  PolyGrid copy = u;
  conv_step_1d(u, u);
  EXPECT_EQ(u, copy);
  EXPECT_THROW(conv_step_1d(u, component_grid_1d(3)), InvalidArgument);
  EXPECT_THROW(conv_step_1d(component_grid_2d(2, 2), component_grid_2d(2, 2)), InvalidArgument);
}

TEST(ConvStep2dTest, MatchesDirectDoubleSum) {
  const std::size_t m = 4;
  const std::size_t n = 3;
  PolyGrid u = component_grid_2d(m, n);
  PolyGrid v = component_grid_2d(m, n, 'v');
  PolyGrid out = conv_step_2d(u, v);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      // u00 v_kl + u01 v_k,l-1 + ... + u_kl v00, spelled out as text.
      std::string expected;
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j <= l; ++j) {
          if (!expected.empty()) expected += " + ";
          expected += "u[" + std::to_string(i) + "," + std::to_string(j) + "]*v[" + std::to_string(k - i) + "," +
                      std::to_string(l - j) + "]";
        }
      }
      EXPECT_EQ(out(k, l), poly_parse(expected)) << "entry " << k << "," << l;
    }
  }
  EXPECT_EQ(poly_format(out(0, 0)), "u[0,0]*v[0,0]");
  EXPECT_THROW(conv_step_2d(u, component_grid_2d(m, n + 1, 'v')), InvalidArgument);
}

// u[0,i] -> u[i] (and the same for v).
Polynomial flatten_row(const Polynomial& p) {
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    std::vector<Factor> fs;
    for (const Factor& f : t.monomial.factors()) fs.push_back({ComponentVar::line(f.var.second(), f.var.family()), f.exp});
    terms.push_back({Monomial::from_factors(fs), t.coeff});
  }
  return Polynomial::from_terms(terms);
}

TEST(ConvStep2dTest, SingleRowReducesTo1d) {
  const std::size_t n = 6;
  PolyGrid u2 = component_grid_2d(1, n);
  PolyGrid v2 = component_grid_2d(1, n, 'v');
  PolyGrid out2 = conv_step_2d(u2, conv_step_2d(u2, v2));
  PolyGrid u1 = component_grid_1d(n);
  PolyGrid v1 = component_grid_1d(n, 'v');
  PolyGrid out1 = conv_step_1d(u1, conv_step_1d(u1, v1));
  for (std::size_t l = 0; l < n; ++l) EXPECT_EQ(flatten_row(out2(0, l)), out1.at(l));
}

TEST(ConvStepInPlaceTest, AgreesWithFunctionalStep) {
  PolyGrid u = component_grid_2d(4, 5);
  PolyGrid acc = conv_step(u, u);
  PolyGrid expected = conv_step(u, acc);
  ConvStats stats;
  conv_step_in_place(u, acc, {nullptr, &stats});
  EXPECT_EQ(acc, expected);
  EXPECT_EQ(stats.cells, 20U);
  EXPECT_EQ(stats.passes, 1U);
}

TEST(ConvDeadlineTest, ExpiredDeadlineThrows) {
  Deadline past = Deadline::after(std::chrono::duration<double>(-1.0));
  PolyGrid u = component_grid_1d(4);
  EXPECT_THROW(conv_step(u, u, {&past, nullptr}), Timeout);
}

// Same fold over x-polynomial entries equals symbolic A_k with u_k -> p_k(x).
TEST(RingGenericityTest, UniPolyFoldMatchesSymbolicSubstitution) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5;
    const unsigned power = 1 + trial % 4;
    SeriesGrid<UniPoly> values = SeriesGrid<UniPoly>::line(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> coeffs;
      for (int d = 0; d <= deg(rng); ++d) coeffs.push_back(testing::random_rational(rng));
      values.at(k) = UniPoly(coeffs);
    }
    SeriesGrid<UniPoly> numeric = power_fold(values, power);
    PolyGrid symbolic = adomian_power_1d(PowerSpec::line(power, n)).grid;
    for (std::size_t k = 0; k < n; ++k) {
      UniPoly substituted =
          poly_substitute<UniPoly>(symbolic.at(k), [&](ComponentVar v) { return values.at(v.index()); });
      EXPECT_EQ(numeric.at(k), substituted) << "power " << power << " entry " << k;
    }
  }
}

TEST(IncrementalPowerTest, MatchesBatchFold) {
  for (unsigned power : {1U, 2U, 4U}) {
    IncrementalPower<Polynomial> inc(power);
    PolyGrid u = component_grid_1d(7);
    PolyGrid batch = power_fold(u, power);
    for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(inc.push(u.at(k)), batch.at(k));
  }
  EXPECT_THROW(IncrementalPower<Polynomial>(0), InvalidArgument);
}

TEST(RationalRingTest, FoldOfNumbersIsCauchyPower) {
  // (1 + x)^3 truncated: coefficients 1, 3, 3, 1, 0.
  SeriesGrid<Rational> s = SeriesGrid<Rational>::line(5);
  s.at(0) = 1;
  s.at(1) = 1;
  SeriesGrid<Rational> cube = power_fold(s, 3);
  std::vector<Rational> got(cube.entries().begin(), cube.entries().end());
  EXPECT_EQ(got, (std::vector<Rational>{1, 3, 3, 1, 0}));
}

}  // namespace
}  // namespace adomian
