#include "liederiv/derivations.hpp"

#include <functional>
#include <utility>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

// Linear forms over the flattened entries of an endomap of a `total`-dimensional
// space. A symbolic vector is a Matrix whose row k holds the coefficients of its
// k-th coordinate.
class MapVariables {
 public:
  explicit MapVariables(std::size_t total) : total_(total) {}

  std::size_t count() const noexcept { return total_ * total_; }

  // Rows [row_off, row_off + row_dim) of M applied to the vector v supported on
  // columns [col_off, col_off + v.size()).
  Matrix apply(std::size_t row_off, std::size_t row_dim, std::size_t col_off, const Vector& v) const {
    Matrix out(row_dim, count());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) == 0) continue;
      for (std::size_t k = 0; k < row_dim; ++k) out(k, flat_index(row_off + k, col_off + j, total_)) = v[j];
    }
    return out;
  }

 private:
  std::size_t total_;
};

// Evaluates `block(i)` for i in [0, count) (in parallel) and stacks the results in order.
Matrix stack_blocks(std::size_t count, std::size_t width, const std::function<Matrix(std::size_t)>& block) {
  std::vector<Matrix> parts(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) parts[i] = block(i);
  Matrix out(0, width);
  for (const auto& p : parts) out.append_rows(p);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n, bool strict_upper, bool full) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!full && (strict_upper ? j <= i : j < i)) continue;
      out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

Matrix derivation_system(const StructureAlgebra& a, PairRange range) {
  const std::size_t n = a.dim();
  const MapVariables vars(n);
  // (i, j) and (j, i) impose independent conditions, so no pair can be dropped.
  (void)range;
  const auto ps = pairs(n, false, true);
  return stack_blocks(ps.size(), vars.count(), [&](std::size_t idx) {
    const auto [i, j] = ps[idx];
    // D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
    const Vector eij = a.multiply(a.basis(i), a.basis(j));
    return vars.apply(0, n, 0, eij) - a.right_basis(j) * vars.apply(0, n, 0, a.basis(i)) -
           a.left_basis(i) * vars.apply(0, n, 0, a.basis(j));
  });
}

Matrix lie_derivation_system(const StructureAlgebra& a, PairRange range) {
  const std::size_t n = a.dim();
  const MapVariables vars(n);
  const auto ps = pairs(n, true, range == PairRange::kFull);
  return stack_blocks(ps.size(), vars.count(), [&](std::size_t idx) {
    const auto [i, j] = ps[idx];
    // L[e_i, e_j] - [L e_i, e_j] - [e_i, L e_j]
    const Vector bij = a.bracket(a.basis(i), a.basis(j));
    return vars.apply(0, n, 0, bij) - (a.right_basis(j) - a.left_basis(j)) * vars.apply(0, n, 0, a.basis(i)) -
           (a.left_basis(i) - a.right_basis(i)) * vars.apply(0, n, 0, a.basis(j));
  });
}

Subspace derivation_space(const StructureAlgebra& a, PairRange range) {
  return kernel_basis(derivation_system(a, range));
}

Subspace lie_derivation_space(const StructureAlgebra& a, PairRange range) {
  return kernel_basis(lie_derivation_system(a, range));
}

Subspace inner_derivations(const StructureAlgebra& a) {
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < a.dim(); ++i) ads.push_back(flatten(a.left_basis(i) - a.right_basis(i)));
  return Subspace::span(a.dim() * a.dim(), ads);
}

// Direct substitution on basis pairs rather than through the assembled systems.
bool is_derivation(const StructureAlgebra& a, const Matrix& map) {
  const std::size_t n = a.dim();
  if (map.rows() != n || map.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = map * a.multiply(a.basis(i), a.basis(j));
      const Vector rhs = add(a.multiply(map.column(i), a.basis(j)), a.multiply(a.basis(i), map.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_lie_derivation(const StructureAlgebra& a, const Matrix& map) {
  const std::size_t n = a.dim();
  if (map.rows() != n || map.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = map * a.bracket(a.basis(i), a.basis(j));
      const Vector rhs = add(a.bracket(map.column(i), a.basis(j)), a.bracket(a.basis(i), map.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

BlockDecomposition decompose_map(const TrivialExtension& ext, const Matrix& map) {
  const std::size_t n = ext.base_dim();
  const std::size_t m = ext.module_dim();
  if (map.rows() != n + m || map.cols() != n + m) {
    throw InputError(error_code::kDimensionMismatch, "decompose_map: map is not an endomap of A ⋉ X");
  }
  return BlockDecomposition{map.block(0, 0, n, n), map.block(n, 0, m, n), map.block(0, n, n, m),
                            map.block(n, n, m, m)};
}

Matrix assemble(const TrivialExtension& ext, const BlockDecomposition& d) {
  const std::size_t n = ext.base_dim();
  const std::size_t m = ext.module_dim();
  Matrix map(n + m, n + m);
  map.set_block(0, 0, d.la);
  map.set_block(n, 0, d.lx);
  map.set_block(0, n, d.t);
  map.set_block(n, n, d.s);
  return map;
}

namespace {

// Precomputed action matrices for writing block conditions.
struct BlockContext {
  explicit BlockContext(const TrivialExtension& e)
      : ext(e), n(e.base_dim()), m(e.module_dim()), vars(n + m) {
    for (std::size_t i = 0; i < n; ++i) {
      xl.push_back(e.module.left_action(e.base.basis(i)));
      xr.push_back(e.module.right_action(e.base.basis(i)));
    }
    for (std::size_t s = 0; s < m; ++s) {
      ol.push_back(e.module.left_orbit(unit_vector(m, s)));
      orr.push_back(e.module.right_orbit(unit_vector(m, s)));
    }
  }

  const TrivialExtension& ext;
  std::size_t n;
  std::size_t m;
  MapVariables vars;
  std::vector<Matrix> xl;   // x -> e_i x
  std::vector<Matrix> xr;   // x -> x e_i
  std::vector<Matrix> ol;   // a -> a x_s   (m x n)
  std::vector<Matrix> orr;  // a -> x_s a   (m x n)

  Matrix la(const Vector& a) const { return vars.apply(0, n, 0, a); }
  Matrix lx(const Vector& a) const { return vars.apply(n, m, 0, a); }
  Matrix t(const Vector& x) const { return vars.apply(0, n, n, x); }
  Matrix s(const Vector& x) const { return vars.apply(n, m, n, x); }

  Vector e(std::size_t i) const { return ext.base.basis(i); }
  Vector x(std::size_t s) const { return unit_vector(m, s); }
  const Matrix& l(std::size_t i) const { return ext.base.left_basis(i); }
  const Matrix& r(std::size_t i) const { return ext.base.right_basis(i); }
};

Matrix width(const BlockContext& c) { return Matrix(0, c.vars.count()); }

}  // namespace

std::vector<LabeledSystem> lie_block_conditions(const TrivialExtension& ext) {
  const BlockContext c(ext);
  const std::size_t n = c.n;
  const std::size_t m = c.m;
  const auto& alg = ext.base;

  // (a) L_A and L_X are Lie derivations.
  Matrix cond_a = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector bij = alg.bracket(c.e(i), c.e(j));
      cond_a.append_rows(c.la(bij) - (c.r(j) - c.l(j)) * c.la(c.e(i)) - (c.l(i) - c.r(i)) * c.la(c.e(j)));
      cond_a.append_rows(c.lx(bij) - (c.xr[j] - c.xl[j]) * c.lx(c.e(i)) - (c.xl[i] - c.xr[i]) * c.lx(c.e(j)));
    }

  // (b) T([a, x]) = [a, T(x)] and [T(x), y] = [T(y), x].
  Matrix cond_b = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      const Vector ax = (c.xl[i] - c.xr[i]) * c.x(s);
      cond_b.append_rows(c.t(ax) - (c.l(i) - c.r(i)) * c.t(c.x(s)));
    }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t u = s + 1; u < m; ++u)
      cond_b.append_rows((c.ol[u] - c.orr[u]) * c.t(c.x(s)) - (c.ol[s] - c.orr[s]) * c.t(c.x(u)));

  // (c) S([a, x]) = [L_A(a), x] + [a, S(x)].
  Matrix cond_c = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      const Vector ax = (c.xl[i] - c.xr[i]) * c.x(s);
      cond_c.append_rows(c.s(ax) - (c.ol[s] - c.orr[s]) * c.la(c.e(i)) - (c.xl[i] - c.xr[i]) * c.s(c.x(s)));
    }

  return {{"(a)", std::move(cond_a)}, {"(b)", std::move(cond_b)}, {"(c)", std::move(cond_c)}};
}

std::vector<LabeledSystem> derivation_block_conditions(const TrivialExtension& ext) {
  const BlockContext c(ext);
  const std::size_t n = c.n;
  const std::size_t m = c.m;
  const auto& alg = ext.base;

  // (i) L_A and L_X are derivations.
  Matrix cond_i = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector eij = alg.multiply(c.e(i), c.e(j));
      cond_i.append_rows(c.la(eij) - c.r(j) * c.la(c.e(i)) - c.l(i) * c.la(c.e(j)));
      cond_i.append_rows(c.lx(eij) - c.xr[j] * c.lx(c.e(i)) - c.xl[i] * c.lx(c.e(j)));
    }

  // (ii) T(ax) = aT(x), T(xa) = T(x)a and xT(y) + T(x)y = 0.
  Matrix cond_ii = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      cond_ii.append_rows(c.t(c.xl[i] * c.x(s)) - c.l(i) * c.t(c.x(s)));
      cond_ii.append_rows(c.t(c.xr[i] * c.x(s)) - c.r(i) * c.t(c.x(s)));
    }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t u = 0; u < m; ++u) cond_ii.append_rows(c.orr[s] * c.t(c.x(u)) + c.ol[u] * c.t(c.x(s)));

  // (iii) S(ax) = aS(x) + L_A(a)x and S(xa) = S(x)a + xL_A(a).
  Matrix cond_iii = width(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      cond_iii.append_rows(c.s(c.xl[i] * c.x(s)) - c.xl[i] * c.s(c.x(s)) - c.ol[s] * c.la(c.e(i)));
      cond_iii.append_rows(c.s(c.xr[i] * c.x(s)) - c.xr[i] * c.s(c.x(s)) - c.orr[s] * c.la(c.e(i)));
    }

  return {{"(i)", std::move(cond_i)}, {"(ii)", std::move(cond_ii)}, {"(iii)", std::move(cond_iii)}};
}

Subspace solution_space(const std::vector<LabeledSystem>& systems, std::size_t ambient_dim) {
  Matrix all(0, ambient_dim);
  for (const auto& s : systems) all.append_rows(s.rows);
  return kernel_basis(all);
}

namespace {

ConditionReport evaluate(const std::vector<LabeledSystem>& systems, const Vector& v, bool in_space,
                         const char* what) {
  ConditionReport report;
  report.in_space = in_space;
  for (const auto& s : systems) (is_zero(s.rows * v) ? report.satisfied : report.failed).push_back(s.label);
  if (report.ok() != in_space) {
    throw InternalError(std::string(what) + ": block conditions disagree with direct membership");
  }
  return report;
}

}  // namespace

ConditionReport check_lie_conditions(const TrivialExtension& ext, const BlockDecomposition& d) {
  const Matrix map = assemble(ext, d);
  return evaluate(lie_block_conditions(ext), flatten(map), is_lie_derivation(ext.total, map),
                  "check_lie_conditions");
}

ConditionReport check_derivation_conditions(const TrivialExtension& ext, const BlockDecomposition& d) {
  const Matrix map = assemble(ext, d);
  return evaluate(derivation_block_conditions(ext), flatten(map), is_derivation(ext.total, map),
                  "check_derivation_conditions");
}

}  // namespace liederiv
