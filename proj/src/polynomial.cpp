#include "adomian/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "adomian/error.hpp"

namespace adomian {

// ---- ComponentVar -----------------------------------------------------------

namespace {

std::uint32_t family_bits(char family) {
  if (family < 'a' || family > 'z') {
    throw InvalidArgument(std::string("component family must be a lowercase letter, got '") +
                          family + "'");
  }
  return static_cast<std::uint32_t>(family - 'a') << 27;
}

}  // namespace

ComponentVar ComponentVar::line(std::uint32_t index, char family) {
  if (index > kMaxIndex1d) throw InvalidArgument("component index out of range");
  return ComponentVar(family_bits(family) | index);
}

ComponentVar ComponentVar::grid(std::uint32_t row, std::uint32_t col, char family) {
  if (row > kMaxIndex2d || col > kMaxIndex2d) throw InvalidArgument("component index out of range");
  return ComponentVar(family_bits(family) | (1U << 26) | (row << 13) | col);
}

std::string ComponentVar::to_string() const {
  std::string s(1, family());
  s += '[';
  s += std::to_string(index());
  if (dim() == 2) {
    s += ',';
    s += std::to_string(second());
  }
  s += ']';
  return s;
}

// ---- Monomial ---------------------------------------------------------------

namespace {

constexpr std::uint64_t kMaxPacked1d = 14;
constexpr std::uint64_t kMaxPacked2d = 7;
constexpr std::uint32_t kMaxPackedIndex = 254;

bool packable(ComponentVar v, int dim) {
  return v.family() == 'u' && v.dim() == dim && v.index() <= kMaxPackedIndex &&
         v.second() <= kMaxPackedIndex;
}

std::uint32_t code_of(ComponentVar v) {
  if (v.dim() == 1) return 255 - v.index();
  return ((255 - v.index()) << 8) | (255 - v.second());
}

ComponentVar var_of(std::uint32_t code, bool line) {
  if (line) return ComponentVar::line(255 - code);
  return ComponentVar::grid(255 - (code >> 8), 255 - (code & 0xFF));
}

}  // namespace

Monomial::Monomial(ComponentVar var, std::uint32_t exp) {
  if (exp == 0) return;
  Factor f{var, exp};
  *this = from_sorted(&f, 1);
}

Monomial Monomial::from_sorted(const Factor* factors, std::size_t count) {
  Monomial m;
  if (count == 0) return m;
  const int dim = factors[0].var.dim();
  bool fits = true;
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < count && fits; ++i) {
    fits = packable(factors[i].var, dim);
    degree += factors[i].exp;
  }
  if (fits && degree <= (dim == 1 ? kMaxPacked1d : kMaxPacked2d)) {
    const unsigned width = dim == 1 ? 8 : 16;
    u128 bits = (u128{degree} << 120) | (u128{dim == 1} << 112);
    unsigned shift = 112;
    for (std::size_t i = 0; i < count; ++i) {
      const u128 code = code_of(factors[i].var);
      for (std::uint32_t e = 0; e < factors[i].exp; ++e) {
        shift -= width;
        bits |= code << shift;
      }
    }
    m.bits_ = bits;
    return m;
  }
  auto* heap = new Factor[count];
  std::copy(factors, factors + count, heap);
  m.bits_ = (u128{kHeapTag} << 120) | (u128{count} << 64) | reinterpret_cast<std::uintptr_t>(heap);
  return m;
}

Monomial::Monomial(const Monomial& other) : bits_(other.bits_) {
  if (!other.packed()) {
    auto* heap = new Factor[other.heap_size()];
    std::copy(other.heap_data(), other.heap_data() + other.heap_size(), heap);
    bits_ = (bits_ >> 64 << 64) | reinterpret_cast<std::uintptr_t>(heap);
  }
}

Monomial& Monomial::operator=(const Monomial& other) {
  if (this != &other) {
    Monomial copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void Monomial::free_heap() { delete[] heap_data(); }

bool Monomial::insert_packed(const Monomial& m, const Monomial& single) {
  const bool line = ((m.bits_ >> 112) & 1U) != 0;
  if ((((m.bits_ ^ single.bits_) >> 112) & 1U) != 0) return false;
  const auto degree = static_cast<unsigned>(m.bits_ >> 120);
  const unsigned width = line ? 8 : 16;
  if (degree + 1 > (line ? kMaxPacked1d : kMaxPacked2d)) return false;
  const u128 code = (single.bits_ >> (112 - width)) & (line ? 0xFF : 0xFFFF);
  // Codes are non-increasing; count those >= code. Padding is zero and
  // every code is at least 1, so padding never counts.
  unsigned before = 0;
#if defined(__SSE2__)
  std::uint64_t lo = static_cast<std::uint64_t>(m.bits_);
  std::uint64_t hi = static_cast<std::uint64_t>(m.bits_ >> 64);
  __m128i v = _mm_set_epi64x(static_cast<long long>(hi), static_cast<long long>(lo));
  int mask;
  if (line) {
    __m128i c = _mm_set1_epi8(static_cast<char>(code));
    mask = _mm_movemask_epi8(_mm_cmpeq_epi8(_mm_max_epu8(v, c), v)) & 0x3FFF;
  } else {
    const __m128i flip = _mm_set1_epi16(static_cast<short>(0x8000));
    __m128i c = _mm_set1_epi16(static_cast<short>(code ^ 0x8000));
    __m128i lt = _mm_cmpgt_epi16(c, _mm_xor_si128(v, flip));
    mask = ~_mm_movemask_epi8(lt) & 0x3FFF;
  }
  // The set bits are a run ending at bit 13.
  before = mask == 0 ? 0 : (14 - static_cast<unsigned>(__builtin_ctz(static_cast<unsigned>(mask)))) / (width / 8);
#else
  for (unsigned shift = 112 - width; before < degree; shift -= width, ++before) {
    if (((m.bits_ >> shift) & (line ? 0xFF : 0xFFFF)) < code) break;
  }
#endif
  const unsigned split = 112 - before * width;  // first bit above the tail
  const u128 tail_mask = (u128{1} << split) - 1;
  bits_ = ((m.bits_ & ~tail_mask) + (u128{1} << 120)) | (code << (split - width)) |
          ((m.bits_ & tail_mask) >> width);
  return true;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  std::size_t out = 0;
  for (const Factor& f : factors) {
    if (f.exp == 0) continue;
    if (out > 0 && factors[out - 1].var == f.var) {
      factors[out - 1].exp += f.exp;
    } else {
      factors[out++] = f;
    }
  }
  return from_sorted(factors.data(), out);
}

FactorList Monomial::factors() const {
  FactorList list;
  if (!packed()) {
    list.external_ = heap_data();
    list.size_ = heap_size();
    return list;
  }
  const auto degree = static_cast<unsigned>(bits_ >> 120);
  const bool line = ((bits_ >> 112) & 1U) != 0;
  const unsigned width = line ? 8 : 16;
  const std::uint32_t mask = line ? 0xFF : 0xFFFF;
  unsigned shift = 112;
  std::uint32_t last = 0;
  for (unsigned k = 0; k < degree; ++k) {
    shift -= width;
    const auto code = static_cast<std::uint32_t>(bits_ >> shift) & mask;
    if (list.size_ > 0 && code == last) {
      ++list.local_[list.size_ - 1].exp;
    } else {
      list.local_[list.size_++] = Factor{var_of(code, line), 1};
      last = code;
    }
  }
  return list;
}

std::uint64_t Monomial::degree() const {
  if (packed()) return static_cast<std::uint64_t>(bits_ >> 120);
  std::uint64_t d = 0;
  for (const Factor& f : factors()) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent_of(ComponentVar var) const {
  for (const Factor& f : factors()) {
    if (f.var == var) return f.exp;
  }
  return 0;
}

Monomial Monomial::multiply_slow(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.packed() && b.packed() && ((a.bits_ ^ b.bits_) >> 112 & 1U) == 0) {
    const bool line = ((a.bits_ >> 112) & 1U) != 0;
    const auto da = static_cast<unsigned>(a.bits_ >> 120);
    const auto db = static_cast<unsigned>(b.bits_ >> 120);
    if (da + db <= (line ? kMaxPacked1d : kMaxPacked2d)) {
      // Merge two non-increasing code sequences.
      const unsigned width = line ? 8 : 16;
      const u128 mask = line ? 0xFF : 0xFFFF;
      unsigned sa = 112 - width;
      unsigned sb = 112 - width;
      unsigned ia = 0;
      unsigned ib = 0;
      unsigned shift = 112;
      u128 bits = (u128{da + db} << 120) | (u128{line} << 112);
      while (ia < da || ib < db) {
        u128 ca = ia < da ? (a.bits_ >> sa) & mask : 0;
        u128 cb = ib < db ? (b.bits_ >> sb) & mask : 0;
        shift -= width;
        if (ib >= db || (ia < da && ca >= cb)) {
          bits |= ca << shift;
          ++ia;
          sa -= width;
        } else {
          bits |= cb << shift;
          ++ib;
          sb -= width;
        }
      }
      Monomial out;
      out.bits_ = bits;
      return out;
    }
  }
  FactorList fa = a.factors();
  FactorList fb = b.factors();
  std::vector<Factor> merged;
  merged.reserve(fa.size() + fb.size());
  const Factor* pa = fa.begin();
  const Factor* pb = fb.begin();
  while (pa != fa.end() && pb != fb.end()) {
    if (pa->var < pb->var) {
      merged.push_back(*pa++);
    } else if (pb->var < pa->var) {
      merged.push_back(*pb++);
    } else {
      merged.push_back(Factor{pa->var, pa->exp + pb->exp});
      ++pa;
      ++pb;
    }
  }
  merged.insert(merged.end(), pa, fa.end());
  merged.insert(merged.end(), pb, fb.end());
  return Monomial::from_sorted(merged.data(), merged.size());
}

bool Monomial::equal_slow(const Monomial& a, const Monomial& b) {
  return a.heap_size() == b.heap_size() &&
         std::equal(a.heap_data(), a.heap_data() + a.heap_size(), b.heap_data());
}

bool Monomial::less_slow(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree();
  std::uint64_t db = b.degree();
  if (da != db) return da < db;
  FactorList fa = a.factors();
  FactorList fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].var == fb[i].var) {
      if (fa[i].exp != fb[i].exp) return fa[i].exp < fb[i].exp;
      continue;
    }
    // The smaller variable is present in one monomial and absent (exponent
    // zero) in the other; the one lacking it comes first.
    return fb[i].var < fa[i].var;
  }
  return fa.size() < fb.size();
}

// ---- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial(), constant});
}

Polynomial::Polynomial(ComponentVar var) { terms_.push_back(Term{Monomial(var), Rational(1)}); }

Polynomial::Polynomial(Monomial monomial, Rational coeff) {
  if (!coeff.is_zero()) terms_.push_back(Term{std::move(monomial), std::move(coeff)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialBuilder builder(terms.size());
  for (Term& t : terms) builder.add(std::move(t.monomial), t.coeff);
  return std::move(builder).build();
}

Polynomial Polynomial::from_canonical(std::vector<Term> terms) {
  assert(std::is_sorted(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_less(a.monomial, b.monomial);
  }));
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) { return *this = poly_add(*this, rhs); }
Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this = poly_sub(*this, rhs); }

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
  } else if (!scale.is_one()) {
    for (Term& t : terms_) t.coeff *= scale;
  }
  return *this;
}

// ---- PolynomialBuilder ------------------------------------------------------

void PolynomialBuilder::add(const Monomial& monomial, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) it->second += coeff;
}

void PolynomialBuilder::add(Monomial&& monomial, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), coeff);
  if (!inserted) it->second += coeff;
}

void PolynomialBuilder::add(const Polynomial& p) {
  for (const Term& t : p.terms()) add(t.monomial, t.coeff);
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const Term& t : p.terms()) add(t.monomial, t.coeff * scale);
}

void PolynomialBuilder::add_product(const Polynomial& a, const Polynomial& b) {
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      Rational c = ta.coeff;
      c *= tb.coeff;
      add(ta.monomial * tb.monomial, c);
    }
  }
}

Polynomial PolynomialBuilder::build() && {
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->second.is_zero()) continue;
    out.terms_.push_back(Term{std::move(const_cast<Monomial&>(it->first)), std::move(it->second)});
  }
  terms_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.monomial, b.monomial); });
  return out;
}

// ---- ProductMerger ----------------------------------------------------------

void ProductMerger::add_product(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return;
  const Term* first = b.terms().data();
  for (const Term& t : a.terms()) streams_.push_back(Stream{t.monomial, t.coeff, first, first + b.size()});
}

Polynomial ProductMerger::build() && {
  // Loser tree over the streams: tree_[0] holds the current winner, inner
  // nodes 1..k-1 the loser of each match, leaves are k..2k-1.
  const std::size_t k = streams_.size();
  std::vector<Term> out;
  if (k == 0) return Polynomial();
  std::vector<Monomial> head(k);
  std::vector<char> done(k, 0);
  for (std::size_t s = 0; s < k; ++s) head[s] = streams_[s].scale * streams_[s].next->monomial;
  auto less = [&](std::size_t x, std::size_t y) {
    return !done[x] && (done[y] || canonical_less(head[x], head[y]));
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tree(k, kNone);
  for (std::size_t s = k; s-- > 0;) {
    std::size_t w = s;
    for (std::size_t node = (s + k) / 2; node > 0; node /= 2) {
      if (tree[node] == kNone) {
        tree[node] = w;
        w = kNone;
        break;
      }
      if (less(tree[node], w)) std::swap(tree[node], w);
    }
    if (w != kNone) tree[0] = w;
  }

  for (;;) {
    const std::size_t w = tree[0];
    if (done[w]) break;
    Stream& st = streams_[w];
    if (!out.empty() && out.back().monomial == head[w]) {
      if (st.coeff.is_one()) {
        out.back().coeff += st.next->coeff;
      } else {
        out.back().coeff += st.coeff * st.next->coeff;
      }
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(Term{head[w], st.coeff.is_one() ? st.next->coeff : st.coeff * st.next->coeff});
    }
    if (++st.next != st.end) {
      head[w] = st.scale * st.next->monomial;
    } else {
      done[w] = 1;
    }
    std::size_t winner = w;
    for (std::size_t node = (w + k) / 2; node > 0; node /= 2) {
      if (less(tree[node], winner)) std::swap(tree[node], winner);
    }
    tree[0] = winner;
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  out.shrink_to_fit();
  streams_.clear();
  return Polynomial::from_canonical(std::move(out));
}

// ---- arithmetic -------------------------------------------------------------

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto take_b = [&](const Term& t) {
    out.push_back(negate_b ? Term{t.monomial, -t.coeff} : t);
  };
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (canonical_less(ia->monomial, ib->monomial)) {
      out.push_back(*ia++);
    } else if (canonical_less(ib->monomial, ia->monomial)) {
      take_b(*ib++);
    } else {
      Rational c = negate_b ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
      if (!c.is_zero()) out.push_back(Term{ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.terms().end(); ++ia) out.push_back(*ia);
  for (; ib != b.terms().end(); ++ib) take_b(*ib);
  return Polynomial::from_canonical(std::move(out));
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder(a.size() * b.size());
  builder.add_product(a, b);
  return std::move(builder).build();
}

Rational poly_eval(const Polynomial& p, const Assignment& assign) {
  return poly_eval(p, [&](ComponentVar v) -> std::optional<Rational> {
    auto it = assign.find(v);
    if (it == assign.end()) return std::nullopt;
    return it->second;
  });
}

Rational poly_eval(const Polynomial& p,
                   const std::function<std::optional<Rational>(ComponentVar)>& lookup) {
  Rational total;
  for (const Term& t : p.terms()) {
    Rational product = t.coeff;
    for (const Factor& f : t.monomial.factors()) {
      std::optional<Rational> value = lookup(f.var);
      if (!value) throw MissingAssignment(f.var.to_string());
      product *= value->pow(f.exp);
    }
    total += product;
  }
  return total;
}

}  // namespace adomian
