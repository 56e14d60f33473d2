#pragma once

// Truncated 1D/2D convolution of series grids, the kernel of the Adomian
// matrix algorithm.
//
// For entry (k, l) the matrix formulation takes the leading (k+1)x(l+1)
// submatrices of the two grids, flips the second horizontally and
// vertically, multiplies element-wise and sums every element. That is
//
//   out(k, l) = sum_{i<=k, j<=l} components(i, j) * acc(k-i, l-j),
//
// which is what conv_cell computes: the flip is the reversed index k-i,
// never a materialized matrix. The literal matrix version needs
// 4(m+1)(n+1) - (m+n+2) matrix operations for an (m+1)x(n+1) grid; here one
// pass costs one cell evaluation per grid entry, counted in ConvStats.
//
// Everything is generic over the entry ring T. EntryRing<T> supplies a
// multiply-accumulate buffer; specializations exist for symbolic
// Polynomial, Rational, and UniPoly (see unipoly.hpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "adomian/deadline.hpp"
#include "adomian/error.hpp"
#include "adomian/polynomial.hpp"
#include "adomian/rational.hpp"
#include "adomian/series_grid.hpp"

namespace adomian {

template <typename T>
struct EntryRing;

template <>
struct EntryRing<Polynomial> {
  using Accumulator = ProductMerger;
  static void multiply_add(Accumulator& acc, const Polynomial& a, const Polynomial& b) {
    acc.add_product(a, b);
  }
  static Polynomial finish(Accumulator&& acc) { return std::move(acc).build(); }
};

template <>
struct EntryRing<Rational> {
  using Accumulator = Rational;
  static void multiply_add(Accumulator& acc, const Rational& a, const Rational& b) { acc += a * b; }
  static Rational finish(Accumulator&& acc) { return std::move(acc); }
};

struct ConvStats {
  std::uint64_t cells = 0;
  std::uint64_t passes = 0;
};

struct ConvControl {
  const Deadline* deadline = nullptr;
  ConvStats* stats = nullptr;
};

// One output entry: sum over i<=k, j<=l of components(i,j) * acc(k-i,l-j).
template <typename T>
T conv_cell(const SeriesGrid<T>& components, const SeriesGrid<T>& acc, std::size_t k,
            std::size_t l) {
  using Ring = EntryRing<T>;
  typename Ring::Accumulator sum{};
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= l; ++j) {
      Ring::multiply_add(sum, components(i, j), acc(k - i, l - j));
    }
  }
  return Ring::finish(std::move(sum));
}

// Overwrites acc with the convolution of components and acc. Entries are
// visited in descending row-major order: out(k,l) reads only acc(i,j) with
// i<=k and j<=l, none of which has been overwritten yet.
template <typename T>
void conv_step_in_place(const SeriesGrid<T>& components, SeriesGrid<T>& acc,
                        ConvControl control = {}) {
  require_same_shape(components, acc);
  for (std::size_t k = acc.rows(); k-- > 0;) {
    for (std::size_t l = acc.cols(); l-- > 0;) {
      if (control.deadline) control.deadline->check();
      acc(k, l) = conv_cell(components, acc, k, l);
    }
  }
  if (control.stats) {
    control.stats->cells += acc.size();
    control.stats->passes += 1;
  }
}

template <typename T>
SeriesGrid<T> conv_step(const SeriesGrid<T>& components, const SeriesGrid<T>& acc,
                        ConvControl control = {}) {
  require_same_shape(components, acc);
  SeriesGrid<T> out = acc;
  for (std::size_t k = 0; k < acc.rows(); ++k) {
    for (std::size_t l = 0; l < acc.cols(); ++l) {
      if (control.deadline) control.deadline->check();
      out(k, l) = conv_cell(components, acc, k, l);
    }
  }
  if (control.stats) {
    control.stats->cells += acc.size();
    control.stats->passes += 1;
  }
  return out;
}

template <typename T>
SeriesGrid<T> conv_step_1d(const SeriesGrid<T>& components, const SeriesGrid<T>& acc,
                           ConvControl control = {}) {
  if (components.dim() != 1 || acc.dim() != 1) throw InvalidArgument("conv_step_1d needs 1D grids");
  return conv_step(components, acc, control);
}

template <typename T>
SeriesGrid<T> conv_step_2d(const SeriesGrid<T>& components, const SeriesGrid<T>& acc,
                           ConvControl control = {}) {
  if (components.dim() != 2 || acc.dim() != 2) throw InvalidArgument("conv_step_2d needs 2D grids");
  return conv_step(components, acc, control);
}

// Grid of Adomian polynomials of u^power: power-1 convolution passes of the
// component grid with itself. power == 1 returns the components.
template <typename T>
SeriesGrid<T> power_fold(const SeriesGrid<T>& components, unsigned power, ConvControl control = {}) {
  if (power < 1) throw InvalidArgument("power must be a positive integer");
  SeriesGrid<T> acc = components;
  for (unsigned pass = 1; pass < power; ++pass) conv_step_in_place(components, acc, control);
  return acc;
}

// Grid for the product u1*u2*...*uP: starts from the last factor and folds
// each earlier factor in, last-but-one first.
template <typename T>
SeriesGrid<T> product_fold(std::span<const SeriesGrid<T>> factors, ConvControl control = {}) {
  if (factors.empty()) throw InvalidArgument("product needs at least one factor");
  for (const auto& f : factors) require_same_shape(factors.front(), f);
  SeriesGrid<T> acc = factors.back();
  for (std::size_t p = factors.size() - 1; p-- > 0;) conv_step_in_place(factors[p], acc, control);
  return acc;
}

// Streams Adomian polynomials of u^power over a 1D series whose components
// arrive one at a time: push(u_k) returns A_k. Each level holds the partial
// convolution powers, so this is power_fold computed cell by cell.
template <typename T>
class IncrementalPower {
 public:
  explicit IncrementalPower(unsigned power) : levels_(power) {
    if (power < 1) throw InvalidArgument("power must be a positive integer");
  }

  const T& push(T component) {
    levels_[0].push_back(std::move(component));
    const std::size_t k = levels_[0].size() - 1;
    const auto& base = levels_[0];
    for (std::size_t level = 1; level < levels_.size(); ++level) {
      const auto& prev = levels_[level - 1];
      typename EntryRing<T>::Accumulator sum{};
      for (std::size_t i = 0; i <= k; ++i) EntryRing<T>::multiply_add(sum, base[i], prev[k - i]);
      levels_[level].push_back(EntryRing<T>::finish(std::move(sum)));
    }
    return levels_.back().back();
  }

  std::size_t size() const { return levels_[0].size(); }
  const std::vector<T>& adomian() const { return levels_.back(); }

 private:
  std::vector<std::vector<T>> levels_;
};

}  // namespace adomian
