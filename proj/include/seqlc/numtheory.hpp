#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqlc {

/// Unsigned 128-bit integer; wide enough for the 89-bit FCSR connection
/// integers of the full-size generator.
using u128 = unsigned __int128;

u128 parse_u128(std::string_view text);
std::string to_string(u128 v);

u128 gcd_u128(u128 a, u128 b);
u128 mulmod(u128 a, u128 b, u128 m);
u128 powmod(u128 base, u128 e, u128 m);
/// Inverse of a mod m; throws std::domain_error when gcd(a, m) != 1.
u128 invmod(u128 a, u128 m);

/// Miller-Rabin with the first 24 prime bases: deterministic below 3.3e24,
/// a probable-prime test above.
bool is_probable_prime(u128 n);

/// Prime factors with multiplicity, ascending. n >= 1.
std::vector<u128> factorize(u128 n);
/// Distinct prime factors, ascending.
std::vector<u128> distinct_prime_factors(u128 n);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
u128 multiplicative_order(u128 a, u128 m);

/// 2-adic valuation of n > 0.
int two_adic_valuation(std::uint64_t n);

}  // namespace seqlc
