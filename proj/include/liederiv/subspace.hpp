#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liederiv/matrix.hpp"

namespace liederiv {

/// Subspace of Q^d stored by its canonical basis: the nonzero rows of the RREF
/// of any spanning set. Two spanning sets of the same space yield equal objects.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `rows` (which must have ambient_dim columns).
  static Subspace span(std::size_t ambient_dim, const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  /// Basis vectors as rows, in reduced row echelon form.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis. v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates().
  Vector from_coordinates(const Vector& coords) const;

  /// Rows N with v in this subspace iff N v == 0.
  Matrix constraint_rows() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; dim == cols - rank(m).
Subspace kernel_basis(const Matrix& m);

/// Some v with m v == b, or nullopt when b is outside the column space.
/// The returned solution is canonical: every free variable of the RREF is zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vector& v);

/// {map * s : s in source}; map has source.ambient_dim() columns.
Subspace image(const Matrix& map, const Subspace& source);

/// Basis vectors of s as the columns of an ambient_dim x dim matrix.
Matrix embedding_matrix(const Subspace& s);

}  // namespace liederiv
