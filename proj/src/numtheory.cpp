#include "seqlc/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqlc {

namespace mp = boost::multiprecision;

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    const u128 next = v * 10 + static_cast<unsigned>(c - '0');
    if (next / 10 != v) throw std::out_of_range("integer exceeds 128 bits");
    v = next;
  }
  return v;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u128 mulmod(u128 a, u128 b, u128 m) {
  if (m == 0) throw std::domain_error("modulus zero");
  if ((a >> 64) == 0 && (b >> 64) == 0) return (a * b) % m;
  const mp::uint256_t p = mp::uint256_t(static_cast<std::uint64_t>(a >> 64)) << 64 |
                          mp::uint256_t(static_cast<std::uint64_t>(a));
  const mp::uint256_t q = mp::uint256_t(static_cast<std::uint64_t>(b >> 64)) << 64 |
                          mp::uint256_t(static_cast<std::uint64_t>(b));
  const mp::uint256_t mm = mp::uint256_t(static_cast<std::uint64_t>(m >> 64)) << 64 |
                           mp::uint256_t(static_cast<std::uint64_t>(m));
  const mp::uint256_t r = (p * q) % mm;
  const auto lo = static_cast<std::uint64_t>(r & 0xffffffffffffffffULL);
  const auto hi = static_cast<std::uint64_t>(r >> 64);
  return (u128{hi} << 64) | lo;
}

u128 powmod(u128 base, u128 e, u128 m) {
  if (m == 1) return 0;
  u128 result = 1;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

u128 invmod(u128 a, u128 m) {
  // Extended Euclid on signed cpp_int to avoid overflow bookkeeping.
  mp::cpp_int r0 = mp::cpp_int(static_cast<std::uint64_t>(m >> 64)) << 64 | static_cast<std::uint64_t>(m);
  mp::cpp_int r1 = mp::cpp_int(static_cast<std::uint64_t>(a >> 64)) << 64 | static_cast<std::uint64_t>(a);
  const mp::cpp_int mod = r0;
  r1 %= mod;
  mp::cpp_int t0 = 0, t1 = 1;
  while (r1 != 0) {
    mp::cpp_int q = r0 / r1;
    mp::cpp_int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mp::cpp_int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("value not invertible modulo m");
  t0 %= mod;
  if (t0 < 0) t0 += mod;
  const auto lo = static_cast<std::uint64_t>(t0 & 0xffffffffffffffffULL);
  const auto hi = static_cast<std::uint64_t>(t0 >> 64);
  return (u128{hi} << 64) | lo;
}

bool is_probable_prime(u128 n) {
  if (n < 2) return false;
  static constexpr unsigned kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases) {
    u128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho. n is odd, composite.
u128 pollard_brent(u128 n) {
  for (u128 c = 1;; ++c) {
    auto f = [&](u128 x) { return (mulmod(x, x, n) + c) % n; };
    u128 y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u128(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u128(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const u128 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<u128> factorize(u128 n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  std::vector<u128> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u128> distinct_prime_factors(u128 n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

u128 multiplicative_order(u128 a, u128 m) {
  if (m < 2) throw std::invalid_argument("order needs modulus >= 2");
  if (gcd_u128(a % m, m) != 1) throw std::domain_error("order of a non-unit");
  // Carmichael-free route: start from phi(m) and strip prime factors.
  u128 phi = m;
  for (u128 p : distinct_prime_factors(m)) phi = phi / p * (p - 1);
  u128 order = phi;
  for (u128 p : distinct_prime_factors(phi)) {
    while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

int two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  return std::countr_zero(n);
}

}  // namespace seqlc
