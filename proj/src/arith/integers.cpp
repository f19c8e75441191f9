#include "maeda/arith/integers.hpp"

#include <stdexcept>

namespace maeda {

std::vector<PrimePower> factorize_int(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize_int: n must be >= 1");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t divisor_count(std::int64_t n) {
  std::int64_t d = 1;
  for (const auto& pe : factorize_int(n)) d *= pe.exponent + 1;
  return d;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pe : factorize_int(n)) out.push_back(pe.prime);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pe : factorize_int(n)) r = r / pe.prime * (pe.prime - 1);
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

namespace {

int legendre_odd(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  // Euler's criterion.
  unsigned __int128 result = 1, base = static_cast<unsigned __int128>(a);
  std::int64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % static_cast<unsigned __int128>(p);
    base = base * base % static_cast<unsigned __int128>(p);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

int kronecker_prime(std::int64_t d, std::int64_t p) {
  if (p == 2) {
    if (d % 2 == 0) return 0;
    std::int64_t r = mod(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return legendre_odd(d, p);
}

}  // namespace

int kronecker(std::int64_t d, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
  int r = 1;
  for (const auto& pe : factorize_int(n)) {
    int s = kronecker_prime(d, pe.prime);
    for (int i = 0; i < pe.exponent; ++i) r *= s;
  }
  return r;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  auto squarefree = [](std::int64_t m) {
    if (m < 0) m = -m;
    for (std::int64_t p = 2; p * p <= m; ++p)
      if (m % (p * p) == 0) return false;
    return true;
  };
  std::int64_t r = mod(d, 4);
  if (r == 1) return squarefree(d);
  if (r == 0) {
    std::int64_t m = d / 4;
    std::int64_t r4 = mod(m, 4);
    return (r4 == 2 || r4 == 3) && squarefree(m);
  }
  return false;
}

std::vector<std::int64_t> negative_fundamental_discriminants_dividing(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t a : divisors(n))
    if (is_fundamental_discriminant(-a)) out.push_back(-a);
  return out;
}

}  // namespace maeda
