#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace maeda {

/// The projective line over Z/N: canonical representatives (u:v) with
/// gcd(u, v, N) = 1 up to unit scaling, and a full lookup table from residue
/// pairs to representative index. The canonical representative of a class is
/// its lexicographically least member. Size equals the index of Gamma_0(N) in
/// SL_2(Z).
class P1Index {
 public:
  explicit P1Index(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t size() const { return reps_.size(); }
  const std::pair<std::int64_t, std::int64_t>& rep(std::size_t i) const { return reps_[i]; }

  /// Index of the class of (u, v); nullopt when gcd(u, v, N) != 1.
  std::optional<std::size_t> lookup(std::int64_t u, std::int64_t v) const;

 private:
  std::int64_t level_;
  std::vector<std::pair<std::int64_t, std::int64_t>> reps_;
  std::vector<std::int32_t> table_;  // level_ * level_ entries, -1 if not in P^1
};

/// N * prod_{p | N} (1 + 1/p).
std::int64_t gamma0_index(std::int64_t level);

}  // namespace maeda
