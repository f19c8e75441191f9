#pragma once

// Weight-k modular symbols for Gamma_0(N), trivial character, in the +1
// quotient of the star involution. Generators are Manin symbols
// [X^i Y^(k-2-i), (u:v)], indexed i * |P^1| + index(u:v).

#include "maeda/arith/subspace.hpp"
#include "maeda/modsym/manin.hpp"
#include "maeda/modsym/p1.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace maeda {

using SparseVector = std::vector<std::pair<Index, Rational>>;

class SymbolSpace {
 public:
  /// Odd k yields an empty space (is_empty_marker() true) instead of an error.
  static SymbolSpace build(std::int64_t level, int weight);

  std::int64_t level() const { return level_; }
  int weight() const { return weight_; }
  int sign() const { return 1; }
  bool is_empty_marker() const { return weight_ % 2 != 0; }

  const P1Index& p1() const { return *p1_; }
  std::size_t generator_count() const { return images_.size(); }
  std::size_t generator_index(int i, std::size_t point) const { return static_cast<std::size_t>(i) * p1_->size() + point; }

  /// Dimension of the full quotient (cuspidal plus boundary part).
  Index dimension() const { return static_cast<Index>(basis_generators_.size()); }

  /// Image of a generator in basis coordinates.
  const SparseVector& generator_image(std::size_t g) const { return images_[g]; }

  /// Generator represented by the j-th basis vector.
  std::size_t basis_generator(Index j) const { return basis_generators_[static_cast<std::size_t>(j)]; }

  /// Monomial degree i and P^1 index of a generator.
  std::pair<int, std::size_t> generator_parts(std::size_t g) const {
    return {static_cast<int>(g / p1_->size()), g % p1_->size()};
  }

  /// Boundary map: one row per cusp class (cusps up to Gamma_0(N) and u/v ~ -u/v).
  const ExactMatrix& boundary() const { return boundary_; }
  const std::vector<Cusp>& cusp_classes() const { return cusp_classes_; }

  const Subspace& cuspidal() const { return cuspidal_; }

 private:
  std::int64_t level_ = 1;
  int weight_ = 2;
  std::shared_ptr<const P1Index> p1_;
  std::vector<SparseVector> images_;
  std::vector<std::size_t> basis_generators_;
  std::vector<Cusp> cusp_classes_;
  ExactMatrix boundary_;
  Subspace cuspidal_;
};

/// Accumulates integer combinations of generators and converts them to basis coordinates.
class GeneratorAccumulator {
 public:
  explicit GeneratorAccumulator(std::size_t generators) : small_(generators, 0), big_(generators, Integer(0)) {}

  void add(std::size_t g, __int128 c) {
    if (c == 0) return;
    if (__builtin_add_overflow(small_[g], c, &small_[g])) {
      flush(g);
      small_[g] = c;
    }
    touch(g);
  }
  void add(std::size_t g, const Integer& c) {
    if (sgn(c) == 0) return;
    big_[g] += c;
    touch(g);
  }

  ExactVector to_basis(const SymbolSpace& space);
  void clear();

 private:
  void flush(std::size_t g);
  void touch(std::size_t g) {
    if (!used_.empty() && used_.back() == g) return;
    used_.push_back(g);
  }

  std::vector<__int128> small_;
  std::vector<Integer> big_;
  std::vector<std::size_t> used_;
};

Integer from_int128(__int128 x);

}  // namespace maeda
