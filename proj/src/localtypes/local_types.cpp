#include "maeda/localtypes/local_types.hpp"

#include "maeda/arith/integers.hpp"

#include <stdexcept>

namespace maeda {

namespace {

std::int64_t lo_two_power(int n) {
  switch (n) {
    case 0:
    case 2:
      return 1;
    case 1:
    case 3:
      return 2;
    case 4:
      return 6;
    case 5:
      return 4;
    case 6:
      return 16;
    default:
      return n % 2 == 1 ? 8 : 12;
  }
}

std::int64_t lo_odd_prime_power(std::int64_t p, int n) {
  if (n == 0) return 1;
  if (n == 1) return 2;
  const std::int64_t split_plus_nonsplit = divisor_count(p - 1) + divisor_count(p + 1);
  if (n == 2) return split_plus_nonsplit - 1;
  if (n % 2 == 0) return split_plus_nonsplit;
  if (n == 3 || p > 3) return 4;
  return 8;  // p = 3, odd n > 3
}

}  // namespace

std::int64_t lo_prime_power(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("lo_prime_power: p must be prime");
  if (n < 0) throw std::invalid_argument("lo_prime_power: exponent must be >= 0");
  return p == 2 ? lo_two_power(n) : lo_odd_prime_power(p, n);
}

LocalOrbitCount lo(std::int64_t level) {
  if (level < 1) throw std::invalid_argument("lo: level must be >= 1");
  LocalOrbitCount out{level, 1, {}};
  for (const auto& pe : factorize_int(level)) {
    const std::int64_t v = lo_prime_power(pe.prime, pe.exponent);
    out.breakdown.push_back({pe.prime, pe.exponent, v});
    out.value *= v;
  }
  return out;
}

std::int64_t character_orbit_count(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("character_orbit_count: m must be >= 1");
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u <= m; ++u)
    if (gcd(u, m) == 1) units.push_back(u % m);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::int64_t orbits = 0;
  for (std::int64_t a = 0; a < m; ++a) {
    if (seen[a]) continue;
    ++orbits;
    for (auto u : units) seen[(a * u) % m] = true;
  }
  return orbits;
}

}  // namespace maeda
