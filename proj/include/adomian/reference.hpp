#pragma once

#include <cstddef>
#include <vector>

#include "adomian/deadline.hpp"
#include "adomian/polynomial.hpp"

namespace adomian::reference {

// Triangular table of reduced polynomials, cells (i, k) with 1 <= k <= i <= n-1.
class ReducedPolyTable {
 public:
  explicit ReducedPolyTable(std::size_t n);

  std::size_t order() const { return n_; }
  Polynomial& at(std::size_t i, std::size_t k);
  const Polynomial& at(std::size_t i, std::size_t k) const;

 private:
  std::size_t index(std::size_t i, std::size_t k) const;
  std::size_t n_;
  std::vector<Polynomial> cells_;
};

// A_M of u^power by brute force over every ordered power-tuple of component
// indices summing to M: the lambda^M coefficient of (sum u_k lambda^k)^power.
Polynomial oracle_1d(unsigned power, std::size_t m, const Deadline* deadline = nullptr);

// A_{kl} of u^power over ordered power-tuples of index pairs summing to (k, l).
Polynomial oracle_2d(unsigned power, std::size_t k, std::size_t l, const Deadline* deadline = nullptr);

// A_0 .. A_{n-1} via oracle_1d.
std::vector<Polynomial> oracle_series(unsigned power, std::size_t n, const Deadline* deadline = nullptr);

// Index recurrence (Corollary 1 of Duan's scheme) with the falling-factorial
// derivative shortcut for u^power.
ReducedPolyTable duan_c1_table(std::size_t n, const Deadline* deadline = nullptr);
std::vector<Polynomial> duan_c1(unsigned power, std::size_t n, const Deadline* deadline = nullptr);

// Recurrence C(i,k) = (1/i) sum_j (j+1) u_{j+1} C(i-1-j, k-1) (Corollary 3).
ReducedPolyTable duan_c3_table(std::size_t n, const Deadline* deadline = nullptr);
std::vector<Polynomial> duan_c3(unsigned power, std::size_t n, const Deadline* deadline = nullptr);

}  // namespace adomian::reference
