#pragma once

#include "maeda/arith/linalg.hpp"
#include "maeda/arith/polynomial.hpp"

#include <utility>
#include <vector>

namespace maeda {

struct FactorPower {
  IntPolynomial factor;  // irreducible over Q, primitive, positive leading coefficient
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// f = content * prod(factor^multiplicity). content carries the sign of f.
struct Factorization {
  Integer content;
  std::vector<FactorPower> factors;  // ordered by degree, then coefficients
  IntPolynomial expand() const;
};

/// Irreducible factorization over Q: squarefree decomposition, factorization
/// modulo the smallest good prime (Berlekamp), Hensel lifting and subset
/// recombination. Throws on the zero polynomial.
Factorization factor_int_poly(const IntPolynomial& f);

/// Yun decomposition of a primitive polynomial: f = prod(parts[i]^(i+1)).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f);

/// Smallest prime p not dividing the leading coefficient with f mod p squarefree.
long good_prime(const IntPolynomial& f);

/// Monic irreducible factors of f modulo p (f mod p must be squarefree, p not dividing lc).
std::vector<std::vector<long>> factor_mod_p(const IntPolynomial& f, long p);

/// Characteristic polynomial of an integral square matrix. Throws on non-square
/// or non-integral input; callers clear denominators themselves.
IntPolynomial charpoly(const ExactMatrix& m);

/// Characteristic polynomial of a rational matrix whose characteristic
/// polynomial is integral (e.g. a Hecke operator in a rational basis).
/// Clears denominators by a scalar L, computes the integral charpoly of L*m,
/// and undoes the scaling. Throws if the result is not integral.
IntPolynomial charpoly_rational(const ExactMatrix& m);

}  // namespace maeda
