#pragma once

// Low-level Manin-symbol machinery: 2x2 integer matrices, the weight-(k-2)
// polynomial action, lifting from P^1(Z/N) to SL_2(Z), Manin's
// continued-fraction trick and the matrix sets defining Hecke operators.

#include "maeda/arith/scalar.hpp"

#include <cstdint>
#include <vector>

namespace maeda {

struct Mat2 {
  std::int64_t a, b, c, d;
  std::int64_t det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Homogeneous polynomial of degree w in X, Y; entry i is the coefficient of X^i Y^(w-i).
using WeightPolynomial = std::vector<Integer>;

WeightPolynomial monomial_polynomial(int w, int i);

/// P(aX + bY, cX + dY). This is the right action of [[a,b],[c,d]] on the
/// polynomial part of a Manin symbol; the left action of g on modular symbols
/// is the right action of the adjugate of g.
WeightPolynomial substitute(const WeightPolynomial& p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Coefficients of (aX + bY)^i (cX + dY)^(w-i) as int128, valid when
/// max(|a|+|b|, |c|+|d|)^w < 2^126 (see monomial_fits_int128).
void substitute_monomial_i128(int w, int i, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                              __int128* out);
bool monomial_fits_int128(int w, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// A matrix in SL_2(Z) whose bottom row is congruent to (c, d) mod N.
/// Requires gcd(c, d, N) = 1.
Mat2 lift_to_sl2z(std::int64_t c, std::int64_t d, std::int64_t level);

/// Matrices g_j in SL_2(Z) with {0, num/den} = sum_j g_j {0, oo} (Manin's trick,
/// from the continued-fraction convergents). den = 0 denotes the cusp oo.
std::vector<Mat2> manin_trick(std::int64_t num, std::int64_t den);

/// Merel's set: [[a,b],[c,d]] with ad - bc = n, a > b >= 0, d > c >= 0.
const std::vector<Mat2>& merel_matrices(std::int64_t n);

/// Right coset representatives of Gamma_0(N) in the determinant-n double coset:
/// [[a,b],[0,d]] with ad = n, 0 <= b < d, gcd(a, N) = 1.
std::vector<Mat2> hecke_coset_representatives(std::int64_t n, std::int64_t level);

/// Cusps of Gamma_0(N): u/v in lowest terms, v >= 0, oo = 1/0.
struct Cusp {
  std::int64_t u, v;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

Cusp normalize_cusp(std::int64_t u, std::int64_t v);
bool cusps_equivalent(const Cusp& x, const Cusp& y, std::int64_t level);

/// Inequivalent cusps of Gamma_0(N), each the lexicographically least (v, u)
/// representative with 0 <= u < v or oo.
std::vector<Cusp> cusp_representatives(std::int64_t level);

}  // namespace maeda
