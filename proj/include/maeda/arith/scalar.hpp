#pragma once

// Exact scalar types and the dense matrix aliases used throughout the
// library. Integers and rationals are GMP-backed; matrices are plain Eigen
// dense matrices over those scalars.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace maeda {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense matrix of rationals. Carrier of every operator in the library.
using ExactMatrix = DenseMatrix<Rational>;
using ExactVector = DenseVector<Rational>;
using Index = Eigen::Index;

inline ExactMatrix zero_matrix(Index rows, Index cols) {
  ExactMatrix m(rows, cols);
  m.setConstant(Rational(0));
  return m;
}

inline ExactMatrix identity_matrix(Index n) {
  ExactMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline ExactVector zero_vector(Index n) {
  ExactVector v(n);
  v.setConstant(Rational(0));
  return v;
}

inline bool is_zero(const ExactMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

inline bool is_integral(const ExactMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

/// Least common multiple of all entry denominators (1 for the empty matrix).
inline Integer denominator_lcm(const ExactMatrix& m) {
  Integer l = 1;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

/// Plain O(n^3) product. Avoids Eigen's packed GEMM, which copies bignums.
inline ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c = zero_matrix(a.rows(), b.cols());
  Rational t;
  for (Index j = 0; j < b.cols(); ++j)
    for (Index l = 0; l < a.cols(); ++l) {
      const Rational& blj = b(l, j);
      if (sgn(blj) == 0) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        if (sgn(a(i, l)) == 0) continue;
        mpq_mul(t.get_mpq_t(), a(i, l).get_mpq_t(), blj.get_mpq_t());
        c(i, j) += t;
      }
    }
  return c;
}

inline ExactVector multiply(const ExactMatrix& a, const ExactVector& v) {
  ExactVector c = zero_vector(a.rows());
  Rational t;
  for (Index l = 0; l < a.cols(); ++l) {
    if (sgn(v(l)) == 0) continue;
    for (Index i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, l)) == 0) continue;
      mpq_mul(t.get_mpq_t(), a(i, l).get_mpq_t(), v(l).get_mpq_t());
      c(i) += t;
    }
  }
  return c;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace maeda
