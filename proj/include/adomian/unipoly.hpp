#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adomian/convolution.hpp"
#include "adomian/rational.hpp"

namespace adomian {

// Univariate polynomial in x with exact rational coefficients. The
// coefficient list has no trailing zeros; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT(implicit)
  explicit UniPoly(std::vector<Rational> coefficients);
  static UniPoly monomial(std::size_t degree, Rational coeff = Rational(1));

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of x^k, zero past the degree.
  Rational coeff(std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Degree; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& scale);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // acc += a * b without a temporary.
  static void multiply_add(UniPoly& acc, const UniPoly& a, const UniPoly& b);

  // Antiderivative vanishing at 0.
  UniPoly integrate() const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly pow(unsigned exponent) const;

  // "1 - x + 1/2*x^2"; "0" for zero. Ascending powers of x.
  std::string to_string() const;
  // Inverse of to_string; accepts terms in any order. Throws ParseError.
  static UniPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

template <>
struct EntryRing<UniPoly> {
  using Accumulator = UniPoly;
  static void multiply_add(Accumulator& acc, const UniPoly& a, const UniPoly& b) {
    UniPoly::multiply_add(acc, a, b);
  }
  static UniPoly finish(Accumulator&& acc) { return std::move(acc); }
};

}  // namespace adomian
