#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace maeda {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. Throws on n < 1.
std::vector<PrimePower> factorize_int(std::int64_t n);

/// Number of positive divisors. Throws on n < 1.
std::int64_t divisor_count(std::int64_t n);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
std::int64_t next_prime(std::int64_t n);  // smallest prime > n
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::int64_t mod(std::int64_t a, std::int64_t m);  // result in [0, m)

struct ExtendedGcd {
  std::int64_t g, x, y;  // a*x + b*y = g >= 0
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Kronecker symbol (d/n) for n >= 1.
int kronecker(std::int64_t d, std::int64_t n);

bool is_fundamental_discriminant(std::int64_t d);

/// Negative fundamental discriminants D with |D| dividing n, ordered by |D| ascending.
std::vector<std::int64_t> negative_fundamental_discriminants_dividing(std::int64_t n);

}  // namespace maeda
