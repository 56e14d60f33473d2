#include "adomian/unipoly.hpp"

#include <algorithm>

#include "adomian/error.hpp"

namespace adomian {

UniPoly::UniPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(std::size_t degree, Rational coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly& UniPoly::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    coeffs_.clear();
  } else {
    for (auto& c : coeffs_) c *= scale;
  }
  return *this;
}

void UniPoly::multiply_add(UniPoly& acc, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (acc.coeffs_.size() < need) acc.coeffs_.resize(need);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  acc.trim();
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  UniPoly::multiply_add(out, a, b);
  return out;
}

UniPoly UniPoly::integrate() const {
  if (is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k + 1] = coeffs_[k] / Rational(static_cast<std::int64_t>(k + 1));
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Rational(static_cast<std::int64_t>(k));
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result(Rational(1));
  for (unsigned e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = negative ? -c : c;
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      out += '*';
    }
    out += 'x';
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto is_digit = [&](std::size_t p) { return p < text.size() && text[p] >= '0' && text[p] <= '9'; };
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (is_digit(pos)) ++pos;
    if (start == pos) throw ParseError(pos, what);
    return text.substr(start, pos - start);
  };

  std::vector<Rational> coeffs;
  auto add = [&](std::size_t degree, const Rational& c) {
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += c;
  };

  skip();
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
    skip();
  }
  for (;;) {
    Rational c(1);
    bool has_coeff = false;
    if (is_digit(pos)) {
      std::size_t start = pos;
      read_digits("digit");
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        read_digits("denominator digits");
      }
      c = Rational::parse(text.substr(start, pos - start));
      has_coeff = true;
    }
    std::size_t degree = 0;
    bool want_x = !has_coeff;
    if (has_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      want_x = true;
    }
    if (want_x) {
      if (pos >= text.size() || text[pos] != 'x') throw ParseError(pos, has_coeff ? "'x'" : "coefficient or 'x'");
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t at = pos;
        std::string_view d = read_digits("exponent digit");
        if (d.size() > 6) throw ParseError(at, "exponent below 10^6");
        degree = std::stoul(std::string(d));
      }
    }
    add(degree, negative ? -c : c);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw ParseError(pos, "'+', '-' or end of input");
    negative = text[pos] == '-';
    ++pos;
    skip();
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace adomian
