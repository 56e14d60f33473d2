#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/hash/hash.h>

#include "adomian/rational.hpp"

namespace adomian {

// A solution-component symbol: u[i] in one dimension, u[i,j] in two.
//
// Packed into 32 bits as family(5) | dim(1) | indices(26), so that the
// integer order of the key is the symbol order: family, then dimension,
// then indices lexicographically. One-dimensional indices must be below
// 2^26, two-dimensional ones below 2^13 each.
class ComponentVar {
 public:
  static constexpr std::uint32_t kMaxIndex1d = (1U << 26) - 1;
  static constexpr std::uint32_t kMaxIndex2d = (1U << 13) - 1;

  ComponentVar() = default;
  static ComponentVar line(std::uint32_t index, char family = 'u');
  static ComponentVar grid(std::uint32_t row, std::uint32_t col, char family = 'u');

  char family() const { return static_cast<char>('a' + (key_ >> 27)); }
  int dim() const { return ((key_ >> 26) & 1U) + 1; }
  // First index (the only one in 1D).
  std::uint32_t index() const { return dim() == 1 ? key_ & kMaxIndex1d : (key_ >> 13) & kMaxIndex2d; }
  // Second index; 0 in 1D.
  std::uint32_t second() const { return dim() == 1 ? 0 : key_ & kMaxIndex2d; }
  std::uint32_t key() const { return key_; }

  std::string to_string() const;

  friend auto operator<=>(ComponentVar, ComponentVar) = default;

  template <typename H>
  friend H AbslHashValue(H h, ComponentVar v) {
    return H::combine(std::move(h), v.key_);
  }

 private:
  explicit ComponentVar(std::uint32_t key) : key_(key) {}
  std::uint32_t key_ = 0;
};

struct Factor {
  ComponentVar var;
  std::uint32_t exp = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Factors of a monomial in variable order. Holds decoded factors itself
// when the monomial is packed, so it must outlive any reference into it.
class FactorList {
 public:
  static constexpr std::size_t kLocal = 14;

  const Factor* begin() const { return data(); }
  const Factor* end() const { return data() + size_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Factor& operator[](std::size_t i) const { return data()[i]; }

 private:
  friend class Monomial;
  const Factor* data() const { return external_ ? external_ : local_; }

  const Factor* external_ = nullptr;
  std::uint32_t size_ = 0;
  Factor local_[kLocal];
};

// Product of powers of distinct ComponentVars, sorted by variable.
// The empty monomial is the constant 1.
//
// Stored in 16 bytes. Monomials over u only, all 1D with indices below 255
// and degree at most 14, or all 2D with indices below 255 and degree at most
// 7, are packed into a 128-bit key:
//
//   byte 15: degree   byte 14: 1 (1D) or 0 (2D)
//   bytes 13..0: one code per occurrence, in variable order, first code
//                most significant; 255-i in 1D, (255-i, 255-j) in 2D.
//
// Comparing two packed keys as integers gives canonical_less. Anything else
// lives on the heap (byte 15 = 0xFF, then size and pointer). A monomial that
// fits the packed form is always packed, so equality is key equality.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(ComponentVar var, std::uint32_t exp = 1);
  // Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  Monomial(const Monomial& other);
  Monomial(Monomial&& other) noexcept : bits_(other.bits_) { other.bits_ = kOne; }
  Monomial& operator=(const Monomial& other);
  Monomial& operator=(Monomial&& other) noexcept {
    if (this != &other) {
      release();
      bits_ = other.bits_;
      other.bits_ = kOne;
    }
    return *this;
  }
  ~Monomial() { release(); }

  FactorList factors() const;
  bool is_one() const { return bits_ == kOne; }
  std::uint64_t degree() const;
  std::uint32_t exponent_of(ComponentVar var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.packed() && b.packed()) {
      if ((a.bits_ >> 120) == 1) {
        if (Monomial out; out.insert_packed(b, a)) return out;
      } else if ((b.bits_ >> 120) == 1) {
        if (Monomial out; out.insert_packed(a, b)) return out;
      }
    }
    return multiply_slow(a, b);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.packed() || b.packed()) return a.bits_ == b.bits_;
    return equal_slow(a, b);
  }
  friend bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.packed() && b.packed()) return a.bits_ < b.bits_;
    return less_slow(a, b);
  }

  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    if (m.packed()) {
      return H::combine(std::move(h), static_cast<std::uint64_t>(m.bits_ >> 64),
                        static_cast<std::uint64_t>(m.bits_));
    }
    for (const Factor& f : m.factors()) h = H::combine(std::move(h), f.var.key(), f.exp);
    return H::combine(std::move(h), m.heap_size());
  }

 private:
  using u128 = unsigned __int128;
  static constexpr u128 kOne = u128{1} << 112;
  static constexpr unsigned kHeapTag = 0xFF;

  // Packs sorted, merged factors, or copies them to the heap.
  static Monomial from_sorted(const Factor* factors, std::size_t count);
  static Monomial multiply_slow(const Monomial& a, const Monomial& b);
  static bool equal_slow(const Monomial& a, const Monomial& b);
  static bool less_slow(const Monomial& a, const Monomial& b);
  // this = m * single, where single is one packed variable of the same
  // dimension as m. False (and this untouched) when the result would not
  // stay packed.
  bool insert_packed(const Monomial& m, const Monomial& single);

  bool packed() const { return (bits_ >> 120) != kHeapTag; }
  std::uint32_t heap_size() const { return static_cast<std::uint32_t>(bits_ >> 64); }
  Factor* heap_data() const {
    return reinterpret_cast<Factor*>(static_cast<std::uintptr_t>(static_cast<std::uint64_t>(bits_)));
  }
  void release() {
    if (!packed()) free_heap();
    bits_ = kOne;
  }
  void free_heap();

  u128 bits_ = kOne;
};

// canonical_less is the canonical term order: lower total degree first;
// equal degree compares exponent vectors over variables in ComponentVar
// order, smaller exponent at the first difference first. So u[1]^2
// precedes u[0]*u[2]. The order is preserved by multiplying both sides with
// the same monomial.

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial with exact rational coefficients, kept in
// canonical form: sorted by canonical_less, one entry per monomial, no zero
// coefficients. The empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(implicit)
  Polynomial(ComponentVar var);          // NOLINT(implicit)
  Polynomial(Monomial monomial, Rational coeff);
  // Arbitrary terms; normalized on construction.
  static Polynomial from_terms(std::vector<Term> terms);
  // Terms already sorted, merged and zero-free.
  static Polynomial from_canonical(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scale);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolynomialBuilder;
  std::vector<Term> terms_;
};

// Accumulates terms in a hash map and emits a canonical Polynomial.
class PolynomialBuilder {
 public:
  PolynomialBuilder() = default;
  explicit PolynomialBuilder(std::size_t expected_terms) { terms_.reserve(expected_terms); }

  void add(const Monomial& monomial, const Rational& coeff);
  void add(Monomial&& monomial, const Rational& coeff);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const Rational& scale);
  // this += a * b
  void add_product(const Polynomial& a, const Polynomial& b);

  std::size_t size() const { return terms_.size(); }
  Polynomial build() &&;

 private:
  absl::flat_hash_map<Monomial, Rational> terms_;
};

// Sums products a*b by merging sorted streams: for one term t of a, the
// terms of t*b are already in canonical order, so the sum is a k-way merge
// with no hashing. The polynomials passed to add_product must stay alive
// and unchanged until build().
class ProductMerger {
 public:
  void add_product(const Polynomial& a, const Polynomial& b);
  Polynomial build() &&;

 private:
  struct Stream {
    Monomial scale;
    Rational coeff;
    const Term* next;
    const Term* end;
  };
  std::vector<Stream> streams_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

using Assignment = std::map<ComponentVar, Rational>;

// Exact value at the assignment. Throws MissingAssignment naming the first
// variable without a value.
Rational poly_eval(const Polynomial& p, const Assignment& assign);
Rational poly_eval(const Polynomial& p,
                   const std::function<std::optional<Rational>(ComponentVar)>& lookup);

// Ring homomorphism into any T constructible from Rational with + and *.
template <typename T, typename Lookup>
T poly_substitute(const Polynomial& p, Lookup&& value_of) {
  T total{Rational(0)};
  for (const Term& term : p.terms()) {
    T product{term.coeff};
    for (const Factor& f : term.monomial.factors()) {
      T value = value_of(f.var);
      for (std::uint32_t e = 0; e < f.exp; ++e) product = product * value;
    }
    total = total + product;
  }
  return total;
}

// Text form, e.g. "u[1]^2 + 2*u[0]*u[2]"; "0" for the zero polynomial.
std::string poly_format(const Polynomial& p);
std::string monomial_format(const Monomial& m);
// Inverse of poly_format. Throws ParseError with position and expectation.
Polynomial poly_parse(std::string_view text);

}  // namespace adomian
