#include "liederiv/subspace.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/rref.hpp"

namespace liederiv {

namespace {

void require_ambient(const Subspace& u, std::size_t d, const char* what) {
  if (u.ambient_dim() != d) throw InputError(error_code::kDimensionMismatch, what);
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& rows) {
  if (rows.rows() == 0) return zero(ambient_dim);
  if (rows.cols() != ambient_dim) {
    throw InputError(error_code::kDimensionMismatch, "Subspace::span: vector length differs from ambient dimension");
  }
  auto red = rref(rows);
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = red.reduced.block(0, 0, red.rank(), ambient_dim);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(ambient_dim);
  return span(ambient_dim, Matrix::from_rows(ambient_dim, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) {
    throw InputError(error_code::kDimensionMismatch, "Subspace::contains: vector length differs from ambient dimension");
  }
  Vector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coef = residual[pivots_[i]];
    if (sgn(coef) == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) {
      if (sgn(row[c]) != 0) residual[c] -= coef * row[c];
    }
  }
  return liederiv::is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  require_ambient(other, ambient_, "Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InputError(error_code::kDimensionMismatch, "Subspace::coordinates: vector not in subspace");
  Vector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw InputError(error_code::kDimensionMismatch, "Subspace::from_coordinates: length mismatch");
  Vector v = zero_vector(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < ambient_; ++c) v[c] += coords[i] * row[c];
  }
  return v;
}

Matrix Subspace::constraint_rows() const {
  if (dim() == 0) return Matrix::identity(ambient_);
  return kernel_basis(basis_).basis();
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  const auto red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;

  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank(); ++i) v[red.pivots[i]] = -red.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError(error_code::kDimensionMismatch, "solve: rhs length differs from row count");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, n) = b[r];
  const auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vector v = zero_vector(n);
  for (std::size_t i = 0; i < red.rank(); ++i) v[red.pivots[i]] = red.reduced(i, n);
  return v;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_ambient(v, u.ambient_dim(), "subspace_sum: ambient mismatch");
  return Subspace::span(u.ambient_dim(), vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_ambient(v, u.ambient_dim(), "subspace_intersect: ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient_dim());
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  return kernel_basis(vstack(u.constraint_rows(), v.constraint_rows()));
}

bool subspace_contains(const Subspace& u, const Vector& v) { return u.contains(v); }

Subspace image(const Matrix& map, const Subspace& source) {
  if (map.cols() != source.ambient_dim()) throw InputError(error_code::kDimensionMismatch, "image: map width differs from ambient dimension");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(map * source.basis_vector(i));
  return Subspace::span(map.rows(), images);
}

Matrix embedding_matrix(const Subspace& s) { return s.basis().transpose(); }

}  // namespace liederiv
