#include "adomian/adomian_matrix.hpp"

#include <limits>
#include <string>

#include "adomian/error.hpp"

namespace adomian {

void PowerSpec::validate() const {
  if (power < 1) throw InvalidArgument("power must be a positive integer, got " + std::to_string(power));
  if (dim != 1 && dim != 2) throw InvalidArgument("dimension must be 1 or 2");
  if (rows < 1 || cols < 1) throw InvalidArgument("order must be at least 1");
  if (dim == 1) {
    if (cols != 1) throw InvalidArgument("1D spec must have a single column");
    if (rows - 1 > ComponentVar::kMaxIndex1d) throw InvalidArgument("order too large");
  } else if (rows - 1 > ComponentVar::kMaxIndex2d || cols - 1 > ComponentVar::kMaxIndex2d) {
    throw InvalidArgument("grid extent too large");
  }
}

PolyGrid component_grid_1d(std::size_t n, char family) {
  PolyGrid g = PolyGrid::line(n);
  for (std::size_t k = 0; k < n; ++k) g.at(k) = ComponentVar::line(static_cast<std::uint32_t>(k), family);
  return g;
}

PolyGrid component_grid_2d(std::size_t rows, std::size_t cols, char family) {
  PolyGrid g = PolyGrid::grid(rows, cols);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t l = 0; l < cols; ++l) {
      g(k, l) = ComponentVar::grid(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), family);
    }
  }
  return g;
}

AdomianResult adomian_power_1d(const PowerSpec& spec, const Deadline* deadline) {
  if (spec.dim != 1) throw InvalidArgument("adomian_power_1d needs a 1D spec");
  spec.validate();
  AdomianResult result{PolyGrid::line(1), {}};
  result.grid = power_fold(component_grid_1d(spec.rows), spec.power, {deadline, &result.stats});
  return result;
}

AdomianResult adomian_power_2d(const PowerSpec& spec, const Deadline* deadline) {
  if (spec.dim != 2) throw InvalidArgument("adomian_power_2d needs a 2D spec");
  spec.validate();
  AdomianResult result{PolyGrid::line(1), {}};
  result.grid = power_fold(component_grid_2d(spec.rows, spec.cols), spec.power, {deadline, &result.stats});
  return result;
}

AdomianResult adomian_product(std::span<const PolyGrid> factors, const Deadline* deadline) {
  if (factors.empty()) throw InvalidArgument("adomian_product needs at least one factor");
  AdomianResult result{PolyGrid::line(1), {}};
  result.grid = product_fold(factors, {deadline, &result.stats});
  return result;
}

std::uint64_t multinomial_term_count(std::size_t count, unsigned power) {
  // C(power + count - 1, power), built incrementally as C(power + i, i).
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i < count; ++i) {
    c = c * (power + i) / i;
    if (c > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

// Calls visit(exponents) for every composition of power into count parts.
template <typename Visit>
void for_each_composition(std::size_t count, unsigned power, Visit&& visit) {
  std::vector<unsigned> exps(count, 0);
  auto recurse = [&](auto&& self, std::size_t slot, unsigned remaining) -> void {
    if (slot + 1 == count) {
      exps[slot] = remaining;
      visit(exps);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      exps[slot] = e;
      self(self, slot + 1, remaining - e);
    }
  };
  recurse(recurse, 0, power);
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

AdomianResult adomian_sum_power(std::span<const PolyGrid> terms, unsigned power,
                                std::uint64_t expansion_limit, const Deadline* deadline) {
  if (terms.empty()) throw InvalidArgument("adomian_sum_power needs at least one term");
  if (power < 1) throw InvalidArgument("power must be a positive integer");
  for (const auto& t : terms) require_same_shape(terms.front(), t);
  std::uint64_t required = multinomial_term_count(terms.size(), power);
  if (required > expansion_limit) {
    throw LimitExceeded("multinomial expansion needs " + std::to_string(required) +
                        " terms, limit is " + std::to_string(expansion_limit));
  }

  const PolyGrid& shape = terms.front();
  AdomianResult result{shape, {}};
  for (auto& entry : result.grid.entries()) entry = Polynomial();

  const mpz_class total = factorial(power);
  std::vector<PolyGrid> factors;
  factors.reserve(power);
  for_each_composition(terms.size(), power, [&](const std::vector<unsigned>& exps) {
    factors.clear();
    mpz_class denom = 1;
    for (std::size_t p = 0; p < exps.size(); ++p) {
      for (unsigned e = 0; e < exps[p]; ++e) factors.push_back(terms[p]);
      denom *= factorial(exps[p]);
    }
    Rational coeff{mpz_class(total / denom)};
    PolyGrid product = product_fold(std::span<const PolyGrid>(factors), {deadline, &result.stats});
    auto out = result.grid.entries();
    auto in = product.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
      in[i] *= coeff;
      out[i] += in[i];
    }
  });
  return result;
}

}  // namespace adomian
