#include "liederiv/trivial_extension.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

std::string describe(const ValidationReport& report) {
  const auto& v = report.violations.front();
  std::string s = v.identity + " fails at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) s += (i ? "," : "") + std::to_string(v.indices[i]);
  return s + ")";
}

}  // namespace

Vector TrivialExtension::embed_algebra(const Vector& a) const {
  Vector v = a;
  v.resize(base_dim() + module_dim());
  return v;
}

Vector TrivialExtension::embed_module(const Vector& x) const {
  Vector v = zero_vector(base_dim());
  v.insert(v.end(), x.begin(), x.end());
  return v;
}

Vector TrivialExtension::project_algebra(const Vector& v) const {
  return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(base_dim()));
}

Vector TrivialExtension::project_module(const Vector& v) const {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(base_dim()), v.end());
}

Matrix TrivialExtension::algebra_embedding() const {
  Matrix m(base_dim() + module_dim(), base_dim());
  for (std::size_t i = 0; i < base_dim(); ++i) m(i, i) = 1;
  return m;
}

Matrix TrivialExtension::module_embedding() const {
  Matrix m(base_dim() + module_dim(), module_dim());
  for (std::size_t i = 0; i < module_dim(); ++i) m(base_dim() + i, i) = 1;
  return m;
}

Matrix TrivialExtension::algebra_projection() const { return algebra_embedding().transpose(); }
Matrix TrivialExtension::module_projection() const { return module_embedding().transpose(); }

TrivialExtension build_trivial_extension(const StructureAlgebra& a, const Bimodule& x) {
  if (auto r = validate_algebra(a); !r.ok()) throw InputError(error_code::kInvalidAlgebra, describe(r));
  if (auto r = validate_bimodule(a, x); !r.ok()) throw InputError(error_code::kInvalidModule, describe(r));

  const std::size_t n = a.dim();
  const std::size_t m = x.dim();
  const std::size_t total = n + m;
  std::vector<Scalar> mul(total * total * total);
  auto at = [total](std::size_t i, std::size_t j, std::size_t k) { return (i * total + j) * total + k; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul[at(i, j, k)] = a.mul(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        mul[at(i, n + j, n + k)] = x.left(i, j, k);
        mul[at(n + j, i, n + k)] = x.right(j, i, k);
      }

  std::vector<std::string> labels = a.labels();
  for (std::size_t j = 0; j < m; ++j) labels.push_back("x" + std::to_string(j + 1));
  Vector unit = a.unit();
  unit.resize(total);

  TrivialExtension ext{a, x, StructureAlgebra(std::move(labels), std::move(mul), std::move(unit))};
  return ext;
}

StarCheck check_star(const TrivialExtension& ext, const Vector& p) {
  const auto idem = Idempotent::verified(ext.base, p);
  if (!idem.nontrivial()) throw InputError(error_code::kTrivialIdempotent, "p must be a nontrivial idempotent (p != 0, 1)");
  const Vector q = idem.complement(ext.base);
  const Matrix sandwich = ext.module.right_action(q) * ext.module.left_action(p);
  for (std::size_t j = 0; j < ext.module_dim(); ++j) {
    if (sandwich.column(j) != unit_vector(ext.module_dim(), j)) return StarCheck{std::nullopt, j};
  }
  return StarCheck{StarContext{ext, p}, std::nullopt};
}

ValidationReport check_simplifications(const StarContext& ctx) {
  ValidationReport report;
  const auto& a = ctx.ext.base;
  const auto& x = ctx.ext.module;
  const Vector p = ctx.p;
  const Vector q = ctx.q();
  const std::size_t m = x.dim();
  for (std::size_t j = 0; j < m; ++j) {
    const Vector xj = unit_vector(m, j);
    if (!is_zero(x.act_left(q, xj))) report.violations.push_back({"qx=0", {j}});
    if (!is_zero(x.act_right(xj, p))) report.violations.push_back({"xp=0", {j}});
    if (x.act_left(p, xj) != xj) report.violations.push_back({"px=x", {j}});
    if (x.act_right(xj, q) != xj) report.violations.push_back({"xq=x", {j}});
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector e = a.basis(i);
      const Vector pep = a.multiply(a.multiply(p, e), p);
      const Vector qeq = a.multiply(a.multiply(q, e), q);
      if (x.act_left(e, xj) != x.act_left(pep, xj)) report.violations.push_back({"ax=papx", {i, j}});
      if (x.act_right(xj, e) != x.act_right(xj, qeq)) report.violations.push_back({"xa=xqaq", {i, j}});
    }
  }
  return report;
}

Subspace center_via_formula(const StarContext& ctx) {
  const auto& a = ctx.ext.base;
  const auto& x = ctx.ext.module;
  const std::size_t n = a.dim();
  Matrix system(0, n);
  for (std::size_t i = 0; i < n; ++i) system.append_rows(a.right_basis(i) - a.left_basis(i));
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const Vector xj = unit_vector(x.dim(), j);
    system.append_rows(x.left_orbit(xj) - x.right_orbit(xj));
  }
  const Subspace in_base = kernel_basis(system);
  std::vector<Vector> embedded;
  for (const auto& v : in_base.basis_vectors()) embedded.push_back(ctx.ext.embed_algebra(v));
  Subspace formula = Subspace::span(ctx.ext.total.dim(), embedded);
  if (!(formula == center(ctx.ext.total))) {
    throw InternalError("center formula disagrees with the directly computed center of A ⋉ X");
  }
  return formula;
}

Matrix TriangularBuild::a_projection() const {
  Matrix m(a.dim(), ext().total.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = 1;
  return m;
}

Matrix TriangularBuild::b_projection() const {
  Matrix m(b.dim(), ext().total.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) m(i, a.dim() + i) = 1;
  return m;
}

TriangularBuild build_triangular(const StructureAlgebra& a, const Bimodule& x, const StructureAlgebra& b) {
  if (auto r = validate_algebra(a); !r.ok()) throw InputError(error_code::kInvalidAlgebra, "A: " + describe(r));
  if (auto r = validate_algebra(b); !r.ok()) throw InputError(error_code::kInvalidAlgebra, "B: " + describe(r));
  if (auto r = validate_bimodule(a, b, x); !r.ok()) throw InputError(error_code::kInvalidModule, describe(r));

  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;
  const std::size_t m = x.dim();
  std::vector<Scalar> left(n * m * m);
  std::vector<Scalar> right(m * n * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < na; ++i) left[(i * m + j) * m + k] = x.left(i, j, k);
      for (std::size_t i = 0; i < nb; ++i) right[(j * n + na + i) * m + k] = x.right(j, i, k);
    }
  Bimodule lifted(n, n, m, std::move(left), std::move(right));
  TrivialExtension ext = build_trivial_extension(direct_sum(a, b), lifted);

  Vector p = a.unit();
  p.resize(n);
  auto star = check_star(ext, p);
  if (!star.holds()) throw InternalError("triangular build does not satisfy p x q = x");
  return TriangularBuild{a, b, x, std::move(*star.context)};
}

}  // namespace liederiv
