#pragma once

#include "maeda/arith/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace maeda {

/// A subspace of Q^n held by its reduced column-echelon basis: basis(pivot[j], j) = 1
/// and basis(pivot[i], j) = 0 for i != j, so coordinates are read off the pivot rows.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const ExactMatrix& columns) {
    Subspace s;
    s.ambient_ = columns.rows();
    if (columns.cols() == 0) {
      s.basis_ = zero_matrix(s.ambient_, 0);
      return s;
    }
    auto rr = rref<Rational>(columns.transpose());
    const Index d = rr.rank();
    s.basis_ = rr.reduced.topRows(d).transpose();
    s.pivots_ = rr.pivots;
    return s;
  }

  static Subspace whole(Index n) { return span(identity_matrix(n)); }
  static Subspace zero(Index n) { return span(zero_matrix(n, 0)); }

  Index dim() const { return basis_.cols(); }
  Index ambient_dim() const { return ambient_; }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Coordinates of a vector assumed to lie in the subspace.
  ExactVector coordinates(const ExactVector& v) const {
    ExactVector c(dim());
    for (Index j = 0; j < dim(); ++j) c(j) = v(pivots_[j]);
    return c;
  }
  ExactMatrix coordinates(const ExactMatrix& cols) const {
    ExactMatrix c(dim(), cols.cols());
    for (Index k = 0; k < cols.cols(); ++k)
      for (Index j = 0; j < dim(); ++j) c(j, k) = cols(pivots_[j], k);
    return c;
  }

  bool contains(const ExactVector& v) const { return multiply(basis_, coordinates(v)) == v; }

  /// Matrix of an ambient endomorphism restricted to this subspace, in the echelon basis.
  /// Throws if the subspace is not invariant.
  ExactMatrix restrict_operator(const ExactMatrix& op) const {
    ExactMatrix image = multiply(op, basis_);
    ExactMatrix x = coordinates(image);
    if (multiply(basis_, x) != image) throw std::logic_error("restrict_operator: subspace is not invariant");
    return x;
  }

  /// Subspace of this one spanned by basis() * coords.
  Subspace sub(const ExactMatrix& coords) const { return span(multiply(basis_, coords)); }

  /// Kernel of a linear map (given on the ambient space) restricted to this subspace.
  Subspace kernel_of(const ExactMatrix& ambient_map) const {
    if (dim() == 0) return *this;
    return sub(kernel_basis<Rational>(multiply(ambient_map, basis_)));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  ExactMatrix basis_;
  std::vector<Index> pivots_;
};

}  // namespace maeda
