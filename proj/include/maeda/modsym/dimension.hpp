#pragma once

#include <cstdint>

namespace maeda {

/// dim S_k(Gamma_0(N)) from the genus and elliptic-point counts. k even >= 2.
std::int64_t dim_cusp_formula(std::int64_t level, int weight);

/// Dimension of the new subspace: sum over M | N of beta(N/M) dim S_k(M),
/// beta(p) = -2, beta(p^2) = 1, beta(p^e) = 0 for e >= 3.
std::int64_t dim_new_formula(std::int64_t level, int weight);

/// ceil(k * mu(N) / 12).
std::int64_t sturm_bound(std::int64_t level, int weight);

/// Number of cusps of Gamma_0(N): sum over d | N of phi(gcd(d, N/d)).
std::int64_t cusp_count(std::int64_t level);

}  // namespace maeda
