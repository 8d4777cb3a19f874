#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liederiv/matrix.hpp"
#include "liederiv/scalar.hpp"

namespace liederiv {

/// Finite-dimensional unital associative algebra over Q given by structure
/// constants: e_i * e_j = sum_k mul(i, j, k) e_k.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  /// `mul` is the flattened tensor c[i][j][k] at index (i * n + j) * n + k.
  StructureAlgebra(std::vector<std::string> labels, std::vector<Scalar> mul, Vector unit);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<Scalar>& tensor() const noexcept { return mul_; }

  const Scalar& mul(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_[(i * dim_ + j) * dim_ + k];
  }

  /// Copy with a single structure constant replaced.
  StructureAlgebra with_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) const;

  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// [a, b] = ab - ba
  Vector bracket(const Vector& a, const Vector& b) const;

  /// Matrix of x -> a x (column j is a e_j).
  Matrix left_mult(const Vector& a) const;
  /// Matrix of x -> x b (column j is e_j b).
  Matrix right_mult(const Vector& b) const;

  /// Cached left/right multiplication by basis vectors.
  const Matrix& left_basis(std::size_t i) const { return left_basis_[i]; }
  const Matrix& right_basis(std::size_t i) const { return right_basis_[i]; }

  bool is_commutative() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> mul_;
  Vector unit_;
  std::vector<Matrix> left_basis_;
  std::vector<Matrix> right_basis_;
};

/// Bimodule over a pair of algebras (left acting algebra of dim `left_dim`, right
/// acting algebra of dim `right_dim`). An ordinary A-bimodule has both equal to A.
///   e_i * x_j = sum_k left(i, j, k) x_k
///   x_j * e_i = sum_k right(j, i, k) x_k
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(std::size_t left_dim, std::size_t right_dim, std::size_t dim, std::vector<Scalar> left,
           std::vector<Scalar> right);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t left_dim() const noexcept { return left_dim_; }
  std::size_t right_dim() const noexcept { return right_dim_; }
  const std::vector<Scalar>& left_tensor() const noexcept { return left_; }
  const std::vector<Scalar>& right_tensor() const noexcept { return right_; }

  const Scalar& left(std::size_t i, std::size_t j, std::size_t k) const {
    return left_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& right(std::size_t j, std::size_t i, std::size_t k) const {
    return right_[(j * right_dim_ + i) * dim_ + k];
  }

  Vector act_left(const Vector& a, const Vector& x) const;
  Vector act_right(const Vector& x, const Vector& a) const;

  /// Matrix of x -> a x on the module.
  Matrix left_action(const Vector& a) const;
  /// Matrix of x -> x a on the module.
  Matrix right_action(const Vector& a) const;
  /// dim x left_dim matrix of a -> a x.
  Matrix left_orbit(const Vector& x) const;
  /// dim x right_dim matrix of a -> x a.
  Matrix right_orbit(const Vector& x) const;

 private:
  std::size_t left_dim_ = 0;
  std::size_t right_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<Scalar> left_;
  std::vector<Scalar> right_;
};

struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Associativity and unit axioms, checked on every basis quadruple.
ValidationReport validate_algebra(const StructureAlgebra& a);
/// Module axioms for an A-bimodule.
ValidationReport validate_bimodule(const StructureAlgebra& a, const Bimodule& x);
/// Module axioms for a (left, right)-bimodule.
ValidationReport validate_bimodule(const StructureAlgebra& left, const StructureAlgebra& right,
                                   const Bimodule& x);

// Constructions. Each produces a valid algebra whenever its inputs are valid.

/// Algebra spanned by the given square matrices (closed under product, containing I).
StructureAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> labels);
StructureAlgebra matrix_algebra(std::size_t n);
StructureAlgebra upper_triangular_algebra(std::size_t n);
/// Q^n with pointwise product.
StructureAlgebra diagonal_algebra(std::size_t n);
/// Q[e]/(e^2).
StructureAlgebra dual_numbers();
/// Q[t]/(t^2 - d).
StructureAlgebra quadratic_extension(const Scalar& d);
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);
StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b);
/// Same algebra on the basis f_i = sum_k basis(k, i) e_k; `basis` must be invertible.
StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& basis);
/// Same module on the basis y_j = sum_k basis(k, j) x_k; `basis` must be invertible.
Bimodule change_basis(const Bimodule& x, const Matrix& basis);
/// A acting on itself by multiplication.
Bimodule regular_bimodule(const StructureAlgebra& a);
/// Zero-dimensional module.
Bimodule zero_bimodule(std::size_t left_dim, std::size_t right_dim);

}  // namespace liederiv
