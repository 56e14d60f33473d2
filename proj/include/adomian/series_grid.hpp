#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adomian/error.hpp"

namespace adomian {

// Dense 1D list or 2D row-major grid of series entries, indexed from 0.
// A 1D grid of extent n is stored as n rows of one column.
template <typename T>
class SeriesGrid {
 public:
  static SeriesGrid line(std::size_t n) {
    if (n == 0) throw InvalidArgument("series extent must be at least 1");
    return SeriesGrid(1, n, 1);
  }
  static SeriesGrid grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("series extents must be at least 1");
    return SeriesGrid(2, rows, cols);
  }

  int dim() const { return dim_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  T& at(std::size_t k) { return entries_.at(k); }
  const T& at(std::size_t k) const { return entries_.at(k); }
  T& at(std::size_t k, std::size_t l) { return entries_.at(offset(k, l)); }
  const T& at(std::size_t k, std::size_t l) const { return entries_.at(offset(k, l)); }

  // Unchecked row-major access.
  T& operator()(std::size_t k, std::size_t l) { return entries_[k * cols_ + l]; }
  const T& operator()(std::size_t k, std::size_t l) const { return entries_[k * cols_ + l]; }

  std::span<T> entries() { return entries_; }
  std::span<const T> entries() const { return entries_; }

  bool same_shape(const SeriesGrid& other) const {
    return dim_ == other.dim_ && rows_ == other.rows_ && cols_ == other.cols_;
  }

  std::string shape_string() const {
    if (dim_ == 1) return "[" + std::to_string(rows_) + "]";
    return "[" + std::to_string(rows_) + "x" + std::to_string(cols_) + "]";
  }

  friend bool operator==(const SeriesGrid&, const SeriesGrid&) = default;

 private:
  SeriesGrid(int dim, std::size_t rows, std::size_t cols)
      : dim_(dim), rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t offset(std::size_t k, std::size_t l) const {
    if (k >= rows_ || l >= cols_) throw InvalidArgument("grid index out of range");
    return k * cols_ + l;
  }

  int dim_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

inline void require_same_shape(const auto& a, const auto& b) {
  if (!a.same_shape(b)) {
    throw InvalidArgument("extent mismatch: " + a.shape_string() + " vs " + b.shape_string());
  }
}

}  // namespace adomian
