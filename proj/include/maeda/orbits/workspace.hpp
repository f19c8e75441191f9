#pragma once

#include "maeda/modsym/operators.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace maeda {

/// Process-wide memo of built spaces keyed by (N, k). Each space is built once,
/// even under concurrent requests, and shared read-only afterwards.
class SpaceCache {
 public:
  std::shared_ptr<const SymbolSpace> get(std::int64_t level, int weight);

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const SymbolSpace> space;
  };
  std::mutex mu_;
  std::map<std::pair<std::int64_t, int>, std::shared_ptr<Slot>> slots_;
};

/// Hecke and Atkin-Lehner matrices restricted to the new subspace, in its
/// echelon basis. This is everything the orbit decomposition needs and what
/// the on-disk cache stores.
struct NewSpaceData {
  std::int64_t level = 1;
  int weight = 2;
  Index dim_full = 0;
  Index dim_cusp = 0;
  Index dim_new = 0;
  std::map<std::int64_t, ExactMatrix> hecke;          // T_p, p not dividing N
  std::map<std::int64_t, ExactMatrix> atkin_lehner;   // W_Q, Q exact prime power divisor
};

/// The first `count` primes not dividing N.
std::vector<std::int64_t> good_primes(std::int64_t level, int count);

/// One (N, k) cell: the full space, its new subspace, and memoized operators.
/// Not thread-safe; use one workspace per thread.
class LevelWorkspace {
 public:
  LevelWorkspace(std::int64_t level, int weight, SpaceCache& cache);

  const SymbolSpace& space() const { return *space_; }
  const Subspace& new_subspace();
  const ExactMatrix& hecke_full(std::int64_t p);

  /// Operators on the new subspace for the first `hecke_primes` good primes and every W_Q.
  NewSpaceData new_space_data(int hecke_primes = 3);

 private:
  SpaceCache& cache_;
  std::shared_ptr<const SymbolSpace> space_;
  std::optional<Subspace> new_;
  std::map<std::int64_t, ExactMatrix> hecke_;
};

}  // namespace maeda
