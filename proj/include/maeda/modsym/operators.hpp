#pragma once

// Hecke, degeneracy and Atkin-Lehner operators on modular symbols. Matrices
// act on column vectors of basis coordinates: column j is the image of the
// j-th basis vector.

#include "maeda/modsym/space.hpp"

#include <string>
#include <vector>

namespace maeda {

struct OperatorMatrix {
  std::string name;
  ExactMatrix matrix;
};

/// Cremona's Heilbronn matrices of determinant p (p prime).
std::vector<Mat2> heilbronn_cremona(std::int64_t p);

/// sum_h x * h for a single generator x, with the right action
/// [P, (u,v)] * h = [P(aX + bY, cX + dY), (ua + vc, ub + vd)]; terms whose point
/// leaves P^1(Z/N) are dropped.
ExactVector heilbronn_image(const SymbolSpace& space, std::size_t generator, const std::vector<Mat2>& matrices);

/// Matrix of sum_h x * h on the full space.
ExactMatrix heilbronn_operator(const SymbolSpace& space, const std::vector<Mat2>& matrices);

/// Matrices whose Heilbronn sum is T_n (U_n on primes dividing N).
std::vector<Mat2> hecke_matrices(std::int64_t n, std::int64_t level);

/// T_n on the full space (Heilbronn route).
ExactMatrix hecke_full(const SymbolSpace& space, std::int64_t n);

/// T_n on the full space from the coset representatives [[a,b],[0,d]], each
/// applied to actual modular symbols and converted back with Manin's trick.
/// Slow; used to cross-check the Heilbronn route.
ExactMatrix hecke_full_cosets(const SymbolSpace& space, std::int64_t n);

/// Left action x -> h x of an integer matrix on modular symbols, from a space
/// at level N to one at level M. Valid whenever h Gamma_0(N) h^-1 lies in Gamma_0(M).
ExactVector act_on_generator(const SymbolSpace& from, std::size_t generator, const Mat2& h, const SymbolSpace& to);
ExactMatrix matrix_action(const SymbolSpace& from, const std::vector<Mat2>& matrices, const SymbolSpace& to);

/// T_p (p not dividing N) or U_p (p | N) on the cuspidal subspace, in its echelon basis.
OperatorMatrix hecke_matrix(const SymbolSpace& space, std::int64_t p);

/// Degeneracy map to level M (M | N, M < N) induced by [[t,0],[0,1]], t | N/M,
/// as a map between full spaces.
OperatorMatrix degeneracy_lower(const SymbolSpace& space, const SymbolSpace& lower, std::int64_t t);

/// Intersection over p | N of the kernels of both degeneracy maps to level N/p,
/// restricted to the cuspidal subspace. lower(M) must return the space at level M.
template <typename LowerSpace>
Subspace new_subspace(const SymbolSpace& space, LowerSpace&& lower);

/// Atkin-Lehner W_Q on the full space, divided by Q^((k-2)/2). Q must be an
/// exact prime-power divisor of N.
OperatorMatrix atkin_lehner_full(const SymbolSpace& space, std::int64_t q);

/// W_Q restricted to a subspace (e.g. the new subspace) in its echelon basis.
OperatorMatrix atkin_lehner(const SymbolSpace& space, const Subspace& subspace, std::int64_t q);

/// Exact prime-power divisors of N, ascending.
std::vector<std::int64_t> exact_prime_power_divisors(std::int64_t level);

}  // namespace maeda

#include "maeda/arith/integers.hpp"

namespace maeda {

template <typename LowerSpace>
Subspace new_subspace(const SymbolSpace& space, LowerSpace&& lower) {
  Subspace current = space.cuspidal();
  for (auto p : prime_divisors(space.level())) {
    if (current.dim() == 0) break;
    const SymbolSpace& low = lower(space.level() / p);
    if (low.cuspidal().dim() == 0) continue;
    for (std::int64_t t : {std::int64_t{1}, p}) current = current.kernel_of(degeneracy_lower(space, low, t).matrix);
  }
  return current;
}

}  // namespace maeda
