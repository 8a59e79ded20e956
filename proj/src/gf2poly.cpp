#include "seqlc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>

namespace seqlc {

namespace {

using Word = BinaryPolynomial::Word;
constexpr int kW = BinaryPolynomial::kWordBits;

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Spread the low 32 bits of w to the even bit positions.
Word spread32(Word w) {
  w &= 0xffffffffULL;
  w = (w | (w << 16)) & 0x0000ffff0000ffffULL;
  w = (w | (w << 8)) & 0x00ff00ff00ff00ffULL;
  w = (w | (w << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  w = (w | (w << 2)) & 0x3333333333333333ULL;
  w = (w | (w << 1)) & 0x5555555555555555ULL;
  return w;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::from_word(Word bits) {
  BinaryPolynomial p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::vector<int>(exponents));
}

BinaryPolynomial BinaryPolynomial::from_exponents(const std::vector<int>& exponents) {
  BinaryPolynomial p;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    p.flip_coeff(e);
  }
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(int k) {
  BinaryPolynomial p;
  p.set_coeff(k, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::x_pow_plus_one(int n) {
  if (n < 0) throw std::invalid_argument("x^n + 1 needs n >= 0");
  BinaryPolynomial p = monomial(n);
  p.flip_coeff(0);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_coefficients(const std::vector<std::uint8_t>& coeffs) {
  BinaryPolynomial p;
  p.words_.assign((coeffs.size() + kW - 1) / kW, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1) p.words_[i / kW] |= Word{1} << (i % kW);
  }
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  text = trim_view(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  if (text.find_first_not_of("01") == std::string_view::npos) {
    BinaryPolynomial p;
    p.words_.assign((text.size() + kW - 1) / kW, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') p.words_[i / kW] |= Word{1} << (i % kW);
    }
    p.trim();
    return p;
  }
  BinaryPolynomial p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view term = trim_view(text.substr(pos, plus - pos));
    if (term.empty()) throw std::invalid_argument("malformed polynomial: empty term in '" + std::string(text) + "'");
    if (term == "1") {
      p.flip_coeff(0);
    } else if (term == "0") {
      // no-op
    } else if (term == "x") {
      p.flip_coeff(1);
    } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
      std::string_view digits = term.substr(2);
      if (digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 9)
        throw std::invalid_argument("malformed exponent in term '" + std::string(term) + "'");
      p.flip_coeff(std::stoi(std::string(digits)));
    } else {
      throw std::invalid_argument("malformed polynomial term '" + std::string(term) + "'");
    }
    pos = plus + 1;
  }
  return p;
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  const int d = degree();
  std::string s(static_cast<std::size_t>(d) + 1, '0');
  for (int i = 0; i <= d; ++i) {
    if (coeff(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

int BinaryPolynomial::degree() const noexcept {
  if (words_.empty()) return kZeroDegree;
  const int top = static_cast<int>(words_.size()) - 1;
  return top * kW + (kW - 1 - std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coeff(int i) const noexcept {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i / kW);
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kW)) & 1;
}

void BinaryPolynomial::ensure_degree(int d) {
  const auto need = static_cast<std::size_t>(d / kW + 1);
  if (words_.size() < need) words_.resize(need, 0);
}

void BinaryPolynomial::set_coeff(int i, bool value) {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  if (value) {
    ensure_degree(i);
    words_[static_cast<std::size_t>(i / kW)] |= Word{1} << (i % kW);
  } else if (static_cast<std::size_t>(i / kW) < words_.size()) {
    words_[static_cast<std::size_t>(i / kW)] &= ~(Word{1} << (i % kW));
    trim();
  }
}

void BinaryPolynomial::flip_coeff(int i) {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  ensure_degree(i);
  words_[static_cast<std::size_t>(i / kW)] ^= Word{1} << (i % kW);
  trim();
}

std::size_t BinaryPolynomial::popcount() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void BinaryPolynomial::add_shifted(const BinaryPolynomial& other, int shift) {
  if (other.is_zero()) return;
  ensure_degree(other.degree() + shift);
  const auto word_shift = static_cast<std::size_t>(shift / kW);
  const int bit_shift = shift % kW;
  const std::size_t n = other.words_.size();
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < n; ++i) words_[i + word_shift] ^= other.words_[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const Word w = other.words_[i];
      words_[i + word_shift] ^= w << bit_shift;
      if (i + word_shift + 1 < words_.size()) words_[i + word_shift + 1] ^= w >> (kW - bit_shift);
    }
  }
  trim();
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator*=(const BinaryPolynomial& other) {
  *this = poly_mul(*this, other);
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) { return poly_mul(a, b); }
BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) { return poly_mod(a, b); }
BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return poly_divmod(a, b).quotient;
}

std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BinaryPolynomial BinaryPolynomial::derivative() const {
  // d/dx x^k = k x^(k-1): keep odd exponents, shift down by one.
  BinaryPolynomial r;
  r.words_.resize(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word odd = words_[i] & 0xaaaaaaaaaaaaaaaaULL;
    r.words_[i] |= odd >> 1;
  }
  r.trim();
  return r;
}

BinaryPolynomial BinaryPolynomial::reversed() const {
  return reversed(degree());
}

BinaryPolynomial BinaryPolynomial::reversed(int len) const {
  BinaryPolynomial r;
  if (len < 0) return r;
  for (int k = 0; k <= len; ++k) {
    if (coeff(len - k)) r.set_coeff(k, true);
  }
  return r;
}

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const BinaryPolynomial& sparse = a.popcount() <= b.popcount() ? a : b;
  const BinaryPolynomial& dense = &sparse == &a ? b : a;
  BinaryPolynomial r;
  const auto& w = sparse.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word bits = w[i];
    while (bits) {
      const int k = std::countr_zero(bits);
      r.add_shifted(dense, static_cast<int>(i) * kW + k);
      bits &= bits - 1;
    }
  }
  return r;
}

BinaryPolynomial poly_square(const BinaryPolynomial& f) {
  BinaryPolynomial r;
  const auto& w = f.words();
  for (std::size_t i = w.size(); i-- > 0;) {
    const Word lo = spread32(w[i]);
    const Word hi = spread32(w[i] >> 32);
    if (hi) r.add_shifted(BinaryPolynomial::from_word(hi), static_cast<int>(2 * i + 1) * kW);
    if (lo) r.add_shifted(BinaryPolynomial::from_word(lo), static_cast<int>(2 * i) * kW);
  }
  return r;
}

DivMod poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  DivMod out;
  out.remainder = a;
  const int db = b.degree();
  for (int d = out.remainder.degree(); d >= db; d = out.remainder.degree()) {
    out.quotient.flip_coeff(d - db);
    out.remainder.add_shifted(b, d - db);
  }
  return out;
}

BinaryPolynomial poly_mod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  BinaryPolynomial r = a;
  const int db = b.degree();
  for (int d = r.degree(); d >= db; d = r.degree()) r.add_shifted(b, d - db);
  return r;
}

BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

ExtendedGcd poly_xgcd(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  BinaryPolynomial r0 = a, r1 = b;
  BinaryPolynomial s0 = BinaryPolynomial::one(), s1;
  BinaryPolynomial t0, t1 = BinaryPolynomial::one();
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    BinaryPolynomial s2 = s0 + q * s1;
    BinaryPolynomial t2 = t0 + q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

BinaryPolynomial poly_powmod(const BinaryPolynomial& base, std::uint64_t e,
                             const BinaryPolynomial& modulus) {
  BinaryPolynomial result = poly_mod(BinaryPolynomial::one(), modulus);
  BinaryPolynomial b = poly_mod(base, modulus);
  while (e) {
    if (e & 1) result = poly_mod(result * b, modulus);
    e >>= 1;
    if (e) b = poly_mod(poly_square(b), modulus);
  }
  return result;
}

BinaryPolynomial x_pow_two_pow_mod(int k, const BinaryPolynomial& modulus) {
  BinaryPolynomial h = poly_mod(BinaryPolynomial::monomial(1), modulus);
  for (int i = 0; i < k; ++i) h = poly_mod(poly_square(h), modulus);
  return h;
}

bool is_irreducible(const BinaryPolynomial& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
  const BinaryPolynomial x = poly_mod(BinaryPolynomial::monomial(1), f);
  if (x_pow_two_pow_mod(d, f) != x) return false;
  for (int r : prime_divisors(d)) {
    const BinaryPolynomial h = x_pow_two_pow_mod(d / r, f) + x;
    if (h.is_zero() || !poly_gcd(h, f).is_one()) return false;
  }
  return true;
}

int multiplicity(BinaryPolynomial H, const BinaryPolynomial& p) {
  if (H.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("multiplicity of a constant");
  int h = 0;
  for (;;) {
    auto [q, r] = poly_divmod(H, p);
    if (!r.is_zero()) return h;
    H = std::move(q);
    ++h;
  }
}

BinaryPolynomial FactorList::product() const {
  BinaryPolynomial r = BinaryPolynomial::one();
  for (const auto& f : factors) {
    for (int i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  }
  return r;
}

namespace {

// f must have only even exponents.
BinaryPolynomial poly_sqrt(const BinaryPolynomial& f) {
  BinaryPolynomial r;
  for (int k = 0; 2 * k <= f.degree(); ++k) {
    if (f.coeff(2 * k)) r.set_coeff(k, true);
  }
  return r;
}

void square_free_decomposition(const BinaryPolynomial& f, int scale,
                               std::vector<std::pair<BinaryPolynomial, int>>& out) {
  BinaryPolynomial c = poly_gcd(f, f.derivative());
  BinaryPolynomial w = f / c;
  int i = 1;
  while (!w.is_one()) {
    BinaryPolynomial y = poly_gcd(w, c);
    BinaryPolynomial fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac, i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) square_free_decomposition(poly_sqrt(c), scale * 2, out);
}

// Splits a square-free f whose irreducible factors all have degree d.
void equal_degree_split(const BinaryPolynomial& f, int d, std::mt19937_64& rng,
                        std::vector<BinaryPolynomial>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    BinaryPolynomial r;
    for (int i = 0; i < n; ++i) {
      if (rng() & 1) r.set_coeff(i, true);
    }
    if (r.degree() < 1) continue;
    // Absolute trace to GF(2): r + r^2 + ... + r^(2^(d-1)) mod f.
    BinaryPolynomial t = r, acc = r;
    for (int i = 1; i < d; ++i) {
      t = poly_mod(poly_square(t), f);
      acc += t;
    }
    if (acc.is_zero()) continue;
    BinaryPolynomial g = poly_gcd(acc, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization followed by equal-degree splitting.
std::vector<BinaryPolynomial> factor_square_free(BinaryPolynomial f) {
  std::vector<BinaryPolynomial> out;
  if (f.degree() < 1) return out;
  std::mt19937_64 rng(0x5eed5eedULL);
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  BinaryPolynomial h = poly_mod(x, f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = poly_mod(poly_square(h), f);
    BinaryPolynomial g = poly_gcd(h + x, f);
    if (!g.is_one()) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      h = poly_mod(h, f);
    }
  }
  if (f.degree() >= 1) out.push_back(f);
  return out;
}

}  // namespace

FactorList factor(const BinaryPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  FactorList result;
  std::vector<std::pair<BinaryPolynomial, int>> parts;
  if (f.degree() >= 1) square_free_decomposition(f, 1, parts);
  for (const auto& [part, mult] : parts) {
    for (auto& p : factor_square_free(part)) result.factors.push_back({std::move(p), mult});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return result;
}

FactorList factor_xn_plus_1(int n) {
  if (n < 1) throw std::invalid_argument("factor_xn_plus_1 requires n >= 1");
  const int sigma = std::countr_zero(static_cast<unsigned>(n));
  const int odd = n >> sigma;
  FactorList result;
  result.sigma = sigma;
  for (auto& p : factor_square_free(BinaryPolynomial::x_pow_plus_one(odd))) {
    result.factors.push_back({std::move(p), 1 << sigma});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return result;
}

}  // namespace seqlc
