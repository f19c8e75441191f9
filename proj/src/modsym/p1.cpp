#include "maeda/modsym/p1.hpp"

#include "maeda/arith/integers.hpp"

#include <stdexcept>

namespace maeda {

P1Index::P1Index(std::int64_t level) : level_(level) {
  if (level < 1) throw std::invalid_argument("P1Index: level must be >= 1");
  const std::int64_t n = level;
  table_.assign(static_cast<std::size_t>(n * n), -1);
  std::vector<std::int64_t> units;
  for (std::int64_t l = 0; l < n; ++l)
    if (gcd(l, n) == 1) units.push_back(l);
  if (n == 1) units = {0};
  for (std::int64_t u = 0; u < n; ++u)
    for (std::int64_t v = 0; v < n; ++v) {
      if (table_[u * n + v] >= 0 || gcd(gcd(u, v), n) != 1) continue;
      const auto idx = static_cast<std::int32_t>(reps_.size());
      reps_.emplace_back(u, v);
      for (auto l : units) table_[(l * u % n) * n + (l * v % n)] = idx;
    }
}

std::optional<std::size_t> P1Index::lookup(std::int64_t u, std::int64_t v) const {
  const std::int64_t n = level_;
  const std::int32_t idx = table_[mod(u, n) * n + mod(v, n)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::int64_t gamma0_index(std::int64_t level) {
  std::int64_t r = level;
  for (auto p : prime_divisors(level)) r = r / p * (p + 1);
  return r;
}

}  // namespace maeda
