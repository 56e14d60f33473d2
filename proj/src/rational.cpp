#include "adomian/rational.hpp"

#include <limits>
#include <utility>

#include "adomian/error.hpp"

namespace adomian {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  // mpz_set_si takes long, which is 64-bit on the platforms we build for.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    assign(q);
  }
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  assign(q);
}

Rational::Rational(const mpz_class& value) { assign(mpq_class(value)); }

void Rational::copy_big(const Rational& other) { big_ = new mpq_class(*other.big_); }

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.is_big()) {
    if (is_big()) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
      den_ = 0;
    }
  } else {
    release();
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this != &other) {
    release();
    num_ = other.num_;
    den_ = other.den_;
    other.num_ = 0;
    other.den_ = 1;
  }
  return *this;
}

void Rational::free_big() {
  delete big_;
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    release();
    num_ = n.get_si();
    den_ = d.get_si();
  } else if (is_big()) {
    *big_ = q;
  } else {
    big_ = new mpq_class(q);
    den_ = 0;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && part[i] == '-') ++i;
    if (i == part.size()) throw ParseError(offset + i, "digit");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw ParseError(offset + j, "digit");
    }
    return mpz_class(std::string(part), 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0, true));
  mpz_class num = parse_int(text.substr(0, slash), 0, true);
  mpz_class den = parse_int(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError(slash + 1, "positive denominator");
  return Rational(mpq_class(num, den));
}

bool Rational::is_integer() const { return is_big() ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (is_big()) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return is_big() ? big_->get_num() : to_mpz(num_); }
mpz_class Rational::denominator() const { return is_big() ? big_->get_den() : to_mpz(den_); }

std::string Rational::to_string() const {
  if (is_big()) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!is_big() && num_ != kMin) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::add_slow(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum)) {
        num_ = sum;
        return *this;
      }
    } else {
      // Both products fit in 127 bits, and so does their sum.
      i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      u128 g = gcd128(abs128(n), static_cast<u128>(d));
      if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
      }
      if (n == 0) d = 1;
      if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t product;
      if (!__builtin_mul_overflow(num_, rhs.num_, &product)) {
        num_ = product;
        return *this;
      }
    }
    u128 g1 = gcd128(abs128(num_), static_cast<u128>(rhs.den_));
    u128 g2 = gcd128(abs128(rhs.num_), static_cast<u128>(den_));
    i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) *
             (rhs.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) *
             (rhs.den_ / static_cast<std::int64_t>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  if (!rhs.is_big() && rhs.num_ != kMin) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_big() || b.is_big()) {
    if (!a.is_big() || !b.is_big()) return false;  // canonical: one fits inline, the other does not
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational Rational::pow(std::uint64_t exponent) const {
  Rational result(1);
  Rational base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace adomian
