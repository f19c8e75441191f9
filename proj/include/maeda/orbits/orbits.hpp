#pragma once

#include "maeda/arith/factor.hpp"
#include "maeda/orbits/workspace.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace maeda {

struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NewformOrbit {
  std::int64_t level = 1;
  int weight = 2;
  int degree = 0;
  Subspace basis;  // inside the new subspace, in its echelon coordinates
  IntPolynomial generator_factor;
  std::map<std::int64_t, IntPolynomial> hecke_charpolys;  // charpoly of T_p restricted to the orbit
  std::optional<std::int64_t> cm_discriminant;
  std::map<std::int64_t, int> al_signs;
};

struct Decomposition {
  std::int64_t level = 1;
  int weight = 2;
  Index total_dim = 0;
  std::vector<std::pair<std::int64_t, long>> generator;  // A = sum c_p T_p
  std::vector<NewformOrbit> orbits;
};

/// Splits the new subspace into Galois orbits using A = T_p0, then
/// T_p0 + c T_p1, then T_p0 + T_p1 + c T_p2 (c = 1..20) until charpoly(A) is
/// squarefree. Orbits are ordered by degree, then by the coefficients of their
/// factor of charpoly(A). Atkin-Lehner signs are filled in; CM data is not.
Decomposition decompose(const NewSpaceData& data);

/// Sign of each normalized W_Q on the orbit. Throws if W_Q is not +-1 there.
std::map<std::int64_t, int> al_signs(const NewformOrbit& orbit, const NewSpaceData& data);

/// First negative fundamental discriminant D (|D| ascending, |D| dividing N)
/// such that T_p vanishes on the orbit for every prime p not dividing N with
/// (D/p) = -1 and p <= sturm_bound(N D^2, k).
std::optional<std::int64_t> is_cm(const NewformOrbit& orbit, const Decomposition& decomposition, LevelWorkspace& ws);

struct NcmResult {
  std::int64_t ncm = 0;
  Decomposition decomposition;
};

/// Full pipeline for one cell, CM flags included.
NcmResult ncm(LevelWorkspace& ws);
NcmResult ncm(std::int64_t level, int weight, SpaceCache& cache);

}  // namespace maeda
