#include <cctype>
#include <string>
#include <vector>

#include "adomian/error.hpp"
#include "adomian/polynomial.hpp"

namespace adomian {

std::string monomial_format(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  bool first = true;
  for (const Factor& f : m.factors()) {
    if (!first) out += '*';
    first = false;
    out += f.var.to_string();
    if (f.exp != 1) {
      out += '^';
      out += std::to_string(f.exp);
    }
  }
  return out;
}

std::string poly_format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = negative ? -t.coeff : t.coeff;
    if (t.monomial.is_one()) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      out += '*';
    }
    out += monomial_format(t.monomial);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    PolynomialBuilder builder;
    skip_spaces();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
      skip_spaces();
    }
    parse_term(builder, negative);
    for (;;) {
      skip_spaces();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, "'+', '-' or end of input");
      ++pos_;
      skip_spaces();
      parse_term(builder, op == '-');
    }
    return std::move(builder).build();
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_spaces() {
    while (!at_end() && text_[pos_] == ' ') ++pos_;
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string_view digits(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(pos_, what);
    return text_.substr(start, pos_ - start);
  }

  std::uint32_t small_number(const char* what) {
    std::size_t start = pos_;
    std::string_view d = digits(what);
    if (d.size() > 9) throw ParseError(start, std::string(what) + " below 10^9");
    return static_cast<std::uint32_t>(std::stoul(std::string(d)));
  }

  void parse_term(PolynomialBuilder& builder, bool negative) {
    Rational coeff(1);
    std::vector<Factor> factors;
    if (is_digit(peek())) {
      std::size_t start = pos_;
      digits("digit");
      if (peek() == '/') {
        ++pos_;
        digits("denominator digits");
      }
      coeff = Rational::parse(text_.substr(start, pos_ - start));
      if (peek() != '*') {
        builder.add(Monomial(), negative ? -coeff : coeff);
        return;
      }
      ++pos_;
    }
    factors.push_back(parse_factor());
    while (peek() == '*') {
      ++pos_;
      factors.push_back(parse_factor());
    }
    builder.add(Monomial::from_factors(std::move(factors)), negative ? -coeff : coeff);
  }

  Factor parse_factor() {
    char family = peek();
    if (family < 'a' || family > 'z') throw ParseError(pos_, "component family letter");
    ++pos_;
    if (peek() != '[') throw ParseError(pos_, "'['");
    ++pos_;
    std::uint32_t first = small_number("index digit");
    std::optional<std::uint32_t> second;
    if (peek() == ',') {
      ++pos_;
      second = small_number("index digit");
    }
    if (peek() != ']') throw ParseError(pos_, second ? "']'" : "',' or ']'");
    std::size_t close = pos_;
    ++pos_;
    std::uint32_t exp = 1;
    if (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      exp = small_number("exponent digit");
      if (exp == 0) throw ParseError(at, "positive exponent");
    }
    try {
      ComponentVar var = second ? ComponentVar::grid(first, *second, family)
                                : ComponentVar::line(first, family);
      return Factor{var, exp};
    } catch (const InvalidArgument&) {
      throw ParseError(close, "index within range");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial poly_parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace adomian
