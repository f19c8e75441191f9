#pragma once

// Exact dense linear algebra over a field scalar. Everything here is a free
// function template over the scalar; the library instantiates it with
// Rational, tests also use it with small modular fields.

#include "maeda/arith/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace maeda {

template <typename Scalar>
inline bool scalar_is_zero(const Scalar& x) {
  return x == Scalar(0);
}
template <>
inline bool scalar_is_zero<Rational>(const Rational& x) {
  return sgn(x) == 0;
}

template <typename Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  return a * b;
}

template <typename Scalar>
struct RrefResult {
  DenseMatrix<Scalar> reduced;
  std::vector<Index> pivots;  // strictly increasing column indices
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Scalar>
RrefResult<Scalar> rref(DenseMatrix<Scalar> m) {
  RrefResult<Scalar> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  Scalar inv, f, t;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!scalar_is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (Index j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!scalar_is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || scalar_is_zero(m(i, c))) continue;
      f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (scalar_is_zero(m(r, j))) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const DenseMatrix<Scalar>& m) {
  return rref(m).rank();
}

/// Columns form a basis of the right kernel, one column per free variable.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& m) {
  const Index cols = m.cols();
  auto rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : rr.pivots) is_pivot[c] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix<Scalar> k(cols, static_cast<Index>(free_cols.size()));
  k.setConstant(Scalar(0));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const Index fc = free_cols[j];
    k(fc, static_cast<Index>(j)) = Scalar(1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      if (!scalar_is_zero(rr.reduced(static_cast<Index>(r), fc)))
        k(rr.pivots[r], static_cast<Index>(j)) = -rr.reduced(static_cast<Index>(r), fc);
  }
  return k;
}

/// Characteristic polynomial det(x*I - m), coefficients lowest degree first.
/// Similarity reduction to upper Hessenberg form followed by the standard
/// determinant recurrence; O(n^3) field operations, no division-free tricks.
template <typename Scalar>
std::vector<Scalar> charpoly_coefficients(DenseMatrix<Scalar> h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("charpoly: matrix is not square");
  const Index n = h.rows();
  Scalar u, t;
  for (Index j = 0; j + 2 < n; ++j) {
    Index piv = -1;
    for (Index i = j + 1; i < n; ++i)
      if (!scalar_is_zero(h(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      h.row(piv).swap(h.row(j + 1));
      h.col(piv).swap(h.col(j + 1));
    }
    for (Index r = j + 2; r < n; ++r) {
      if (scalar_is_zero(h(r, j))) continue;
      u = h(r, j) / h(j + 1, j);
      for (Index c = 0; c < n; ++c) {
        if (scalar_is_zero(h(j + 1, c))) continue;
        t = u * h(j + 1, c);
        h(r, c) -= t;
      }
      for (Index c = 0; c < n; ++c) {
        if (scalar_is_zero(h(c, r))) continue;
        t = u * h(c, r);
        h(c, j + 1) += t;
      }
    }
  }
  // p[m] has degree m.
  std::vector<std::vector<Scalar>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {Scalar(1)};
  for (Index m = 1; m <= n; ++m) {
    const auto& prev = p[m - 1];
    std::vector<Scalar> cur(static_cast<std::size_t>(m) + 1, Scalar(0));
    for (Index i = 0; i < m; ++i) {
      cur[i + 1] += prev[i];
      t = h(m - 1, m - 1) * prev[i];
      cur[i] -= t;
    }
    Scalar prod(1);
    for (Index i = 1; i < m; ++i) {
      prod *= h(m - i, m - i - 1);
      if (scalar_is_zero(prod)) break;
      if (scalar_is_zero(h(m - i - 1, m - 1))) continue;
      Scalar coef = h(m - i - 1, m - 1) * prod;
      const auto& q = p[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) {
        t = coef * q[d];
        cur[d] -= t;
      }
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

/// f(m) for f given lowest degree first, by Horner's rule.
template <typename Scalar, typename Coef>
DenseMatrix<Scalar> evaluate_at_matrix(const std::vector<Coef>& f, const DenseMatrix<Scalar>& m) {
  const Index n = m.rows();
  DenseMatrix<Scalar> acc(n, n);
  acc.setConstant(Scalar(0));
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = multiply(acc, m);
    Scalar c(*it);
    if (!scalar_is_zero(c))
      for (Index i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

}  // namespace maeda
