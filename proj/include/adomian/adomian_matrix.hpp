#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "adomian/convolution.hpp"
#include "adomian/polynomial.hpp"
#include "adomian/series_grid.hpp"

namespace adomian {

using PolyGrid = SeriesGrid<Polynomial>;

// Order of nonlinearity and grid extent for F = u^power.
struct PowerSpec {
  unsigned power = 1;
  int dim = 1;
  std::size_t rows = 1;  // n in 1D, m in 2D
  std::size_t cols = 1;  // always 1 in 1D

  static PowerSpec line(unsigned power, std::size_t order) { return {power, 1, order, 1}; }
  static PowerSpec grid(unsigned power, std::size_t rows, std::size_t cols) {
    return {power, 2, rows, cols};
  }

  // Throws InvalidArgument for power < 1, zero extents, or indices that do
  // not fit a ComponentVar.
  void validate() const;
};

struct AdomianResult {
  // Entry k (1D) or (k,l) (2D) holds A_k or A_{kl}.
  PolyGrid grid;
  ConvStats stats;
};

// u[0..n-1] or u[i,j] for the leading rows x cols block.
PolyGrid component_grid_1d(std::size_t n, char family = 'u');
PolyGrid component_grid_2d(std::size_t rows, std::size_t cols, char family = 'u');

AdomianResult adomian_power_1d(const PowerSpec& spec, const Deadline* deadline = nullptr);
AdomianResult adomian_power_2d(const PowerSpec& spec, const Deadline* deadline = nullptr);

// Product of the given series, all of the same shape.
AdomianResult adomian_product(std::span<const PolyGrid> factors, const Deadline* deadline = nullptr);

// (sum of terms)^power, expanded by the multinomial theorem into products
// that are each generated with adomian_product and summed entry-wise.
constexpr std::uint64_t kDefaultExpansionLimit = 10'000;
AdomianResult adomian_sum_power(std::span<const PolyGrid> terms, unsigned power,
                                std::uint64_t expansion_limit = kDefaultExpansionLimit,
                                const Deadline* deadline = nullptr);

// Number of terms C(power + count - 1, power) in the multinomial expansion,
// saturating at UINT64_MAX.
std::uint64_t multinomial_term_count(std::size_t count, unsigned power);

}  // namespace adomian
