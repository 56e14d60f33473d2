#include "adomian/reference.hpp"

#include <cstdint>

#include "adomian/error.hpp"

namespace adomian::reference {

ReducedPolyTable::ReducedPolyTable(std::size_t n) : n_(n), cells_(n > 1 ? (n - 1) * n / 2 : 0) {}

std::size_t ReducedPolyTable::index(std::size_t i, std::size_t k) const {
  if (k < 1 || k > i || i + 1 > n_) throw InvalidArgument("reduced table index out of range");
  return (i - 1) * i / 2 + (k - 1);
}

Polynomial& ReducedPolyTable::at(std::size_t i, std::size_t k) { return cells_[index(i, k)]; }
const Polynomial& ReducedPolyTable::at(std::size_t i, std::size_t k) const { return cells_[index(i, k)]; }

namespace {

void validate(unsigned power) {
  if (power < 1) throw InvalidArgument("power must be a positive integer");
}

Polynomial u(std::size_t i) { return Polynomial(ComponentVar::line(static_cast<std::uint32_t>(i))); }

// N!/(N-k)!, zero once k exceeds N.
Rational falling_factorial(unsigned power, std::size_t k) {
  if (k > power) return Rational(0);
  mpz_class f = 1;
  for (std::size_t j = 0; j < k; ++j) f *= power - j;
  return Rational(f);
}

Polynomial u0_power(std::size_t exponent) {
  if (exponent == 0) return Polynomial(Rational(1));
  return Polynomial(Monomial(ComponentVar::line(0), static_cast<std::uint32_t>(exponent)), Rational(1));
}

// sum_{k=1..i} N!/(N-k)! u0^(N-k) table(i, k)
Polynomial assemble(unsigned power, const ReducedPolyTable& table, std::size_t i) {
  PolynomialBuilder builder;
  for (std::size_t k = 1; k <= i && k <= power; ++k) {
    Polynomial weighted = poly_mul(u0_power(power - k), table.at(i, k));
    builder.add_scaled(weighted, falling_factorial(power, k));
  }
  return std::move(builder).build();
}

std::vector<Polynomial> assemble_all(unsigned power, std::size_t n, const ReducedPolyTable& table) {
  std::vector<Polynomial> out;
  out.reserve(n);
  out.push_back(u0_power(power));
  for (std::size_t i = 1; i < n; ++i) out.push_back(assemble(power, table, i));
  return out;
}

class LeafClock {
 public:
  explicit LeafClock(const Deadline* deadline) : deadline_(deadline) {}
  void tick() {
    if (deadline_ && (++count_ & 0xFFF) == 0) deadline_->check();
  }

 private:
  const Deadline* deadline_;
  std::uint64_t count_ = 0;
};

}  // namespace

Polynomial oracle_1d(unsigned power, std::size_t m, const Deadline* deadline) {
  validate(power);
  // counts[i] = how many tuple slots currently hold index i
  std::vector<std::uint32_t> counts(m + 1, 0);
  PolynomialBuilder builder;
  LeafClock clock(deadline);
  auto recurse = [&](auto&& self, unsigned slot, std::size_t remaining) -> void {
    if (slot + 1 == power) {
      ++counts[remaining];
      std::vector<Factor> factors;
      for (std::size_t i = 0; i <= m; ++i) {
        if (counts[i] > 0) factors.push_back(Factor{ComponentVar::line(static_cast<std::uint32_t>(i)), counts[i]});
      }
      builder.add(Monomial::from_factors(std::move(factors)), Rational(1));
      --counts[remaining];
      clock.tick();
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      ++counts[k];
      self(self, slot + 1, remaining - k);
      --counts[k];
    }
  };
  recurse(recurse, 0, m);
  return std::move(builder).build();
}

Polynomial oracle_2d(unsigned power, std::size_t k, std::size_t l, const Deadline* deadline) {
  validate(power);
  std::vector<std::pair<std::size_t, std::size_t>> chosen(power);
  PolynomialBuilder builder;
  LeafClock clock(deadline);
  auto recurse = [&](auto&& self, unsigned slot, std::size_t rk, std::size_t rl) -> void {
    if (slot + 1 == power) {
      chosen[slot] = {rk, rl};
      std::vector<Factor> factors;
      factors.reserve(power);
      for (const auto& [a, b] : chosen) {
        factors.push_back(
            Factor{ComponentVar::grid(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), 1});
      }
      builder.add(Monomial::from_factors(std::move(factors)), Rational(1));
      clock.tick();
      return;
    }
    for (std::size_t a = 0; a <= rk; ++a) {
      for (std::size_t b = 0; b <= rl; ++b) {
        chosen[slot] = {a, b};
        self(self, slot + 1, rk - a, rl - b);
      }
    }
  };
  recurse(recurse, 0, k, l);
  return std::move(builder).build();
}

std::vector<Polynomial> oracle_series(unsigned power, std::size_t n, const Deadline* deadline) {
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) out.push_back(oracle_1d(power, m, deadline));
  return out;
}

ReducedPolyTable duan_c1_table(std::size_t n, const Deadline* deadline) {
  ReducedPolyTable z(n);
  const ComponentVar u1 = ComponentVar::line(1);
  for (std::size_t i = 1; i < n; ++i) z.at(i, 1) = u(i);
  for (std::size_t i = 2; i < n; ++i) {
    for (std::size_t j = 2; j <= i; ++j) {
      if (deadline) deadline->check();
      // u_1 * Z(i-1, j-1), each term divided by its own u_1 exponent.
      PolynomialBuilder builder;
      for (const Term& t : z.at(i - 1, j - 1).terms()) {
        Monomial m = t.monomial * Monomial(u1);
        Rational c = t.coeff / Rational(m.exponent_of(u1));
        builder.add(std::move(m), c);
      }
      z.at(i, j) = std::move(builder).build();
    }
    for (std::size_t j = 2; j <= i / 2; ++j) {
      if (deadline) deadline->check();
      // Z(i-j, j) with every subscript raised by one.
      PolynomialBuilder builder;
      builder.add(z.at(i, j));
      for (const Term& t : z.at(i - j, j).terms()) {
        std::vector<Factor> shifted;
        for (const Factor& f : t.monomial.factors()) {
          shifted.push_back(Factor{ComponentVar::line(f.var.index() + 1), f.exp});
        }
        builder.add(Monomial::from_factors(std::move(shifted)), t.coeff);
      }
      z.at(i, j) = std::move(builder).build();
    }
  }
  return z;
}

std::vector<Polynomial> duan_c1(unsigned power, std::size_t n, const Deadline* deadline) {
  validate(power);
  if (n < 1) throw InvalidArgument("order must be at least 1");
  return assemble_all(power, n, duan_c1_table(n, deadline));
}

ReducedPolyTable duan_c3_table(std::size_t n, const Deadline* deadline) {
  ReducedPolyTable c(n);
  for (std::size_t i = 1; i < n; ++i) {
    c.at(i, 1) = u(i);
    const Rational inv_i(1, static_cast<std::int64_t>(i));
    for (std::size_t k = 2; k <= i; ++k) {
      if (deadline) deadline->check();
      PolynomialBuilder builder;
      for (std::size_t j = 0; j + k <= i; ++j) {
        Polynomial scaled = u(j + 1);
        scaled *= Rational(static_cast<std::int64_t>(j + 1)) * inv_i;
        builder.add_product(scaled, c.at(i - 1 - j, k - 1));
      }
      c.at(i, k) = std::move(builder).build();
    }
  }
  return c;
}

std::vector<Polynomial> duan_c3(unsigned power, std::size_t n, const Deadline* deadline) {
  validate(power);
  if (n < 1) throw InvalidArgument("order must be at least 1");
  return assemble_all(power, n, duan_c3_table(n, deadline));
}

}  // namespace adomian::reference
