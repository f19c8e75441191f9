#include "maeda/modsym/dimension.hpp"

#include "maeda/arith/integers.hpp"
#include "maeda/modsym/p1.hpp"

#include <stdexcept>

namespace maeda {

namespace {

void check_weight(int weight) {
  if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("dimension formula: weight must be even and >= 2");
}

std::int64_t elliptic_count(std::int64_t level, std::int64_t disc, std::int64_t square) {
  if (level % square == 0) return 0;
  std::int64_t r = 1;
  for (auto p : prime_divisors(level)) r *= 1 + kronecker(disc, p);
  return r;
}

std::int64_t beta(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pe : factorize_int(n)) {
    if (pe.exponent == 1) r *= -2;
    else if (pe.exponent >= 3) return 0;
  }
  return r;
}

}  // namespace

std::int64_t cusp_count(std::int64_t level) {
  std::int64_t c = 0;
  for (auto d : divisors(level)) c += euler_phi(gcd(d, level / d));
  return c;
}

std::int64_t dim_cusp_formula(std::int64_t level, int weight) {
  check_weight(weight);
  if (level < 1) throw std::invalid_argument("dimension formula: level must be >= 1");
  const std::int64_t mu = gamma0_index(level);
  const std::int64_t e2 = elliptic_count(level, -4, 4);
  const std::int64_t e3 = elliptic_count(level, -3, 9);
  const std::int64_t c = cusp_count(level);
  // 12 g = 12 + mu - 3 e2 - 4 e3 - 6 c
  const std::int64_t twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * c;
  if (twelve_g % 12 != 0) throw std::logic_error("dimension formula: non-integral genus");
  const std::int64_t g = twelve_g / 12;
  if (weight == 2) return g;
  const std::int64_t k = weight;
  return (k - 1) * (g - 1) + (k / 2 - 1) * c + e2 * (k / 4) + e3 * (k / 3);
}

std::int64_t dim_new_formula(std::int64_t level, int weight) {
  std::int64_t total = 0;
  for (auto m : divisors(level)) {
    const std::int64_t b = beta(level / m);
    if (b != 0) total += b * dim_cusp_formula(m, weight);
  }
  return total;
}

std::int64_t sturm_bound(std::int64_t level, int weight) {
  const std::int64_t num = static_cast<std::int64_t>(weight) * gamma0_index(level);
  return (num + 11) / 12;
}

}  // namespace maeda
