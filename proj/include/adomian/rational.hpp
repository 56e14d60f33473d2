#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adomian {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in int64 are stored inline;
// anything larger spills to a heap GMP rational. The representation is canonical:
// a value that fits inline is never held in the big form, so structural
// equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  Rational(const Rational& other) : den_(other.den_) {
    if (other.is_big()) {
      copy_big(other);
    } else {
      num_ = other.num_;
    }
  }
  Rational(Rational&& other) noexcept : den_(other.den_) {
    num_ = other.num_;
    other.num_ = 0;
    other.den_ = 1;
  }
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational() { release(); }

  // Accepts "<int>" or "<int>/<positive int>". Throws ParseError.
  static Rational parse(std::string_view text);

  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs) {
    std::int64_t sum;
    if (den_ == 1 && rhs.den_ == 1 && !__builtin_add_overflow(num_, rhs.num_, &sum)) {
      num_ = sum;
      return *this;
    }
    return add_slow(rhs);
  }
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational pow(std::uint64_t exponent) const;

 private:
  void assign(const mpq_class& value);
  void copy_big(const Rational& other);
  Rational& add_slow(const Rational& rhs);
  void release() {
    if (is_big()) free_big();
  }
  void free_big();
  bool is_big() const { return den_ == 0; }

  // den_ == 0 marks the big form, with big_ owning the value.
  union {
    std::int64_t num_ = 0;
    mpq_class* big_;
  };
  std::int64_t den_ = 1;
};

}  // namespace adomian
