#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "centerbound/error.hpp"

namespace centerbound {

/// Group orders and bound sides are exact; |G'|^{4r} overflows machine words fast.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline std::uint64_t to_u64(const BigInt& n, const char* what = "integer") {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw CapExceeded(what, n.str(), std::numeric_limits<std::uint64_t>::max());
  return static_cast<std::uint64_t>(n);
}

/// Prime divisors in increasing order. Orders of permutation groups of degree
/// n only have prime factors <= n, so trial division terminates quickly.
inline std::vector<std::uint64_t> prime_factors(BigInt n) {
  std::vector<std::uint64_t> primes;
  if (n <= 1) return primes;
  for (std::uint64_t p = 2; BigInt(p) * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(to_u64(n, "prime factor"));
  return primes;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Largest power of p dividing n.
inline BigInt p_part(BigInt n, std::uint64_t p) {
  BigInt part = 1;
  if (n == 0) return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// Exponent k with n == p^k, or nullopt when n is not a power of p.
inline std::optional<unsigned> exact_log(BigInt n, std::uint64_t p) {
  if (n < 1) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

struct PrimePower {
  std::uint64_t prime = 0;  // 0 for n == 1
  unsigned exponent = 0;
};

/// Decomposes n = p^k; n == 1 yields {0, 0}. nullopt when n has two prime factors.
inline std::optional<PrimePower> as_prime_power(const BigInt& n) {
  if (n == 1) return PrimePower{};
  const auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  return PrimePower{primes.front(), *exact_log(n, primes.front())};
}

inline unsigned floor_log2(BigInt n) {
  unsigned k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return k;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace centerbound
