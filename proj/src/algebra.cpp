#include "liederiv/algebra.hpp"

#include <set>

#include "liederiv/errors.hpp"
#include "liederiv/rref.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<Scalar> mul, Vector unit)
    : dim_(unit.size()), labels_(std::move(labels)), mul_(std::move(mul)), unit_(std::move(unit)) {
  if (labels_.size() != dim_ || mul_.size() != dim_ * dim_ * dim_) {
    throw InputError(error_code::kDimensionMismatch,
                     "StructureAlgebra: labels/tensor sizes disagree with the unit length " + std::to_string(dim_));
  }
  left_basis_.reserve(dim_);
  right_basis_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix l(dim_, dim_);
    Matrix r(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        l(k, j) = this->mul(i, j, k);
        r(k, j) = this->mul(j, i, k);
      }
    }
    left_basis_.push_back(std::move(l));
    right_basis_.push_back(std::move(r));
  }
}

StructureAlgebra StructureAlgebra::with_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) const {
  auto mul = mul_;
  mul.at((i * dim_ + j) * dim_ + k) = std::move(value);
  return StructureAlgebra(labels_, std::move(mul), unit_);
}

Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) {
    throw InputError(error_code::kDimensionMismatch, "StructureAlgebra::multiply: vector length mismatch");
  }
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = mul(i, j, k);
        if (sgn(c) != 0) out[k] += ab * c;
      }
    }
  }
  return out;
}

Vector StructureAlgebra::bracket(const Vector& a, const Vector& b) const {
  return sub(multiply(a, b), multiply(b, a));
}

Matrix StructureAlgebra::left_mult(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a.at(i)) == 0) continue;
    m = m + a[i] * left_basis_[i];
  }
  return m;
}

Matrix StructureAlgebra::right_mult(const Vector& b) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(b.at(i)) == 0) continue;
    m = m + b[i] * right_basis_[i];
  }
  return m;
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (mul(i, j, k) != mul(j, i, k)) return false;
  return true;
}

Bimodule::Bimodule(std::size_t left_dim, std::size_t right_dim, std::size_t dim, std::vector<Scalar> left,
                   std::vector<Scalar> right)
    : left_dim_(left_dim), right_dim_(right_dim), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != left_dim_ * dim_ * dim_ || right_.size() != dim_ * right_dim_ * dim_) {
    throw InputError(error_code::kDimensionMismatch, "Bimodule: action tensor sizes disagree with dimensions");
  }
}

Vector Bimodule::act_left(const Vector& a, const Vector& x) const { return left_action(a) * x; }

Vector Bimodule::act_right(const Vector& x, const Vector& a) const { return right_action(a) * x; }

Matrix Bimodule::left_action(const Vector& a) const {
  if (a.size() != left_dim_) throw InputError(error_code::kDimensionMismatch, "Bimodule::left_action: length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < left_dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(left(i, j, k)) != 0) m(k, j) += a[i] * left(i, j, k);
  }
  return m;
}

Matrix Bimodule::right_action(const Vector& a) const {
  if (a.size() != right_dim_) throw InputError(error_code::kDimensionMismatch, "Bimodule::right_action: length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < right_dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(right(j, i, k)) != 0) m(k, j) += a[i] * right(j, i, k);
  }
  return m;
}

Matrix Bimodule::left_orbit(const Vector& x) const {
  if (x.size() != dim_) throw InputError(error_code::kDimensionMismatch, "Bimodule::left_orbit: length mismatch");
  Matrix m(dim_, left_dim_);
  for (std::size_t i = 0; i < left_dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(x[j]) == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(left(i, j, k)) != 0) m(k, i) += x[j] * left(i, j, k);
    }
  return m;
}

Matrix Bimodule::right_orbit(const Vector& x) const {
  if (x.size() != dim_) throw InputError(error_code::kDimensionMismatch, "Bimodule::right_orbit: length mismatch");
  Matrix m(dim_, right_dim_);
  for (std::size_t i = 0; i < right_dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(x[j]) == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(right(j, i, k)) != 0) m(k, i) += x[j] * right(j, i, k);
    }
  return m;
}

ValidationReport validate_algebra(const StructureAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar lhs = 0;
          Scalar rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += a.mul(i, j, m) * a.mul(m, k, l);
            rhs += a.mul(j, k, m) * a.mul(i, m, l);
          }
          if (lhs != rhs) report.violations.push_back({"(ab)c=a(bc)", {i, j, k, l}});
        }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = a.basis(i);
    const Vector left = a.multiply(a.unit(), e);
    const Vector right = a.multiply(e, a.unit());
    for (std::size_t k = 0; k < n; ++k) {
      if (left[k] != e[k]) report.violations.push_back({"1a=a", {i, k}});
      if (right[k] != e[k]) report.violations.push_back({"a1=a", {i, k}});
    }
  }
  return report;
}

ValidationReport validate_bimodule(const StructureAlgebra& a, const Bimodule& x) { return validate_bimodule(a, a, x); }

ValidationReport validate_bimodule(const StructureAlgebra& la, const StructureAlgebra& ra, const Bimodule& x) {
  ValidationReport report;
  if (x.left_dim() != la.dim() || x.right_dim() != ra.dim()) {
    report.violations.push_back({"action dimensions", {x.left_dim(), la.dim(), x.right_dim(), ra.dim()}});
    return report;
  }
  const std::size_t m = x.dim();
  const std::size_t nl = la.dim();
  const std::size_t nr = ra.dim();

  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          Scalar lhs = 0;
          Scalar rhs = 0;
          for (std::size_t k = 0; k < nl; ++k) lhs += la.mul(i, j, k) * x.left(k, s, t);
          for (std::size_t u = 0; u < m; ++u) rhs += x.left(j, s, u) * x.left(i, u, t);
          if (lhs != rhs) report.violations.push_back({"(ab)x=a(bx)", {i, j, s, t}});
        }

  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          Scalar lhs = 0;
          Scalar rhs = 0;
          for (std::size_t k = 0; k < nr; ++k) lhs += ra.mul(i, j, k) * x.right(s, k, t);
          for (std::size_t u = 0; u < m; ++u) rhs += x.right(s, i, u) * x.right(u, j, t);
          if (lhs != rhs) report.violations.push_back({"x(ab)=(xa)b", {s, i, j, t}});
        }

  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          Scalar lhs = 0;
          Scalar rhs = 0;
          for (std::size_t u = 0; u < m; ++u) {
            lhs += x.left(i, s, u) * x.right(u, j, t);
            rhs += x.right(s, j, u) * x.left(i, u, t);
          }
          if (lhs != rhs) report.violations.push_back({"(ax)b=a(xb)", {i, s, j, t}});
        }

  const Matrix left_unit = x.left_action(la.unit());
  const Matrix right_unit = x.right_action(ra.unit());
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      const Scalar expected = s == t ? 1 : 0;
      if (left_unit(t, s) != expected) report.violations.push_back({"1x=x", {s, t}});
      if (right_unit(t, s) != expected) report.violations.push_back({"x1=x", {s, t}});
    }
  return report;
}

StructureAlgebra algebra_from_matrices(const std::vector<Matrix>& basis, std::vector<std::string> labels) {
  const std::size_t n = basis.size();
  if (n == 0 || labels.size() != n) {
    throw InputError(error_code::kDimensionMismatch, "algebra_from_matrices: need one label per basis matrix");
  }
  const std::size_t d = basis[0].rows();
  std::vector<Vector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  const Matrix cols = Matrix::from_columns(d * d, flat);
  if (rank(cols) != n) throw InputError(error_code::kInvalidAlgebra, "algebra_from_matrices: basis is linearly dependent");

  auto coords = [&](const Matrix& m) {
    auto sol = solve(cols, flatten(m));
    if (!sol) throw InputError(error_code::kInvalidAlgebra, "algebra_from_matrices: span is not closed under products");
    return *sol;
  };

  std::vector<Scalar> mul(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector c = coords(basis[i] * basis[j]);
      for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = c[k];
    }
  Vector unit = coords(Matrix::identity(d));
  return StructureAlgebra(std::move(labels), std::move(mul), std::move(unit));
}

namespace {

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::string unit_label(std::size_t i, std::size_t j) {
  return "E" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

StructureAlgebra matrix_algebra(std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(matrix_unit(n, i, j));
      labels.push_back(unit_label(i, j));
    }
  return algebra_from_matrices(basis, std::move(labels));
}

StructureAlgebra upper_triangular_algebra(std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      basis.push_back(matrix_unit(n, i, j));
      labels.push_back(unit_label(i, j));
    }
  return algebra_from_matrices(basis, std::move(labels));
}

StructureAlgebra diagonal_algebra(std::size_t n) {
  std::vector<Scalar> mul(n * n * n);
  std::vector<std::string> labels;
  Vector unit(n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    mul[(i * n + i) * n + i] = 1;
    labels.push_back("e" + std::to_string(i + 1));
  }
  return StructureAlgebra(std::move(labels), std::move(mul), std::move(unit));
}

StructureAlgebra dual_numbers() { return quadratic_extension(0); }

StructureAlgebra quadratic_extension(const Scalar& d) {
  // basis 1, t with t*t = d
  std::vector<Scalar> mul(8);
  auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 2 + j) * 2 + k; };
  mul[at(0, 0, 0)] = 1;
  mul[at(0, 1, 1)] = 1;
  mul[at(1, 0, 1)] = 1;
  mul[at(1, 1, 0)] = d;
  return StructureAlgebra({"1", is_zero(d) ? "eps" : "t"}, std::move(mul), Vector{1, 0});
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;
  std::vector<Scalar> mul(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) mul[(i * n + j) * n + k] = a.mul(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) mul[((na + i) * n + na + j) * n + na + k] = b.mul(i, j, k);

  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    for (std::size_t i = 0; i < n; ++i) labels[i] = (i < na ? "a." : "b.") + labels[i];
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return StructureAlgebra(std::move(labels), std::move(mul), std::move(unit));
}

StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<Scalar> mul(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          for (std::size_t m = 0; m < na; ++m) {
            if (sgn(a.mul(i, k, m)) == 0) continue;
            for (std::size_t o = 0; o < nb; ++o) {
              if (sgn(b.mul(j, l, o)) == 0) continue;
              mul[((i * nb + j) * n + k * nb + l) * n + m * nb + o] = a.mul(i, k, m) * b.mul(j, l, o);
            }
          }
  std::vector<std::string> labels;
  Vector unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
      unit[i * nb + j] = a.unit()[i] * b.unit()[j];
    }
  return StructureAlgebra(std::move(labels), std::move(mul), std::move(unit));
}

namespace {

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError(error_code::kDimensionMismatch, "change_basis: basis matrix is not square");
  auto red = rref(hstack(m, Matrix::identity(n)));
  if (red.rank() < n || red.pivots[n - 1] != n - 1) {
    throw InputError(error_code::kDimensionMismatch, "change_basis: basis matrix is singular");
  }
  return red.reduced.block(0, n, n, n);
}

}  // namespace

StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& basis) {
  const std::size_t n = a.dim();
  if (basis.rows() != n) throw InputError(error_code::kDimensionMismatch, "change_basis: basis matrix has wrong size");
  const Matrix inv = inverse(basis);
  std::vector<Vector> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(basis.column(i));
  std::vector<Scalar> mul(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector c = inv * a.multiply(f[i], f[j]);
      for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = c[k];
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
  return StructureAlgebra(std::move(labels), std::move(mul), inv * a.unit());
}

Bimodule change_basis(const Bimodule& x, const Matrix& basis) {
  const std::size_t m = x.dim();
  if (basis.rows() != m) throw InputError(error_code::kDimensionMismatch, "change_basis: basis matrix has wrong size");
  const Matrix inv = inverse(basis);
  std::vector<Scalar> left(x.left_dim() * m * m);
  std::vector<Scalar> right(m * x.right_dim() * m);
  for (std::size_t i = 0; i < x.left_dim(); ++i) {
    const Matrix act = inv * x.left_action(unit_vector(x.left_dim(), i)) * basis;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) left[(i * m + j) * m + k] = act(k, j);
  }
  for (std::size_t i = 0; i < x.right_dim(); ++i) {
    const Matrix act = inv * x.right_action(unit_vector(x.right_dim(), i)) * basis;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) right[(j * x.right_dim() + i) * m + k] = act(k, j);
  }
  return Bimodule(x.left_dim(), x.right_dim(), m, std::move(left), std::move(right));
}

Bimodule regular_bimodule(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> left(n * n * n);
  std::vector<Scalar> right(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left[(i * n + j) * n + k] = a.mul(i, j, k);   // e_i x_j
        right[(j * n + i) * n + k] = a.mul(j, i, k);  // x_j e_i
      }
  return Bimodule(n, n, n, std::move(left), std::move(right));
}

Bimodule zero_bimodule(std::size_t left_dim, std::size_t right_dim) {
  return Bimodule(left_dim, right_dim, 0, {}, {});
}

}  // namespace liederiv
