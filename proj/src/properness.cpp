#include "liederiv/properness.hpp"

#include <numeric>

#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/rref.hpp"

namespace liederiv {

namespace {

// Symbolic l(v) for an endomap l of an n-dimensional space: row k holds the
// coefficients of coordinate k over the flattened entries of l.
Matrix symbolic_image(std::size_t n, const Vector& v) {
  Matrix out(n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out(k, flat_index(k, j, n)) = v[j];
  }
  return out;
}

// Rows forcing every column of l into the subspace z.
Matrix range_in(const Subspace& z) {
  const std::size_t n = z.ambient_dim();
  const Matrix constraints = z.constraint_rows();
  Matrix rows(0, n * n);
  for (std::size_t j = 0; j < n; ++j) rows.append_rows(constraints * symbolic_image(n, unit_vector(n, j)));
  return rows;
}

Matrix combine(const std::vector<Matrix>& parts) {
  return std::accumulate(parts.begin() + 1, parts.end(), parts.front(),
                         [](Matrix acc, const Matrix& p) { return vstack(acc, p); });
}

}  // namespace

Subspace central_killing_commutators(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix rows = range_in(center(a));
  for (const auto& c : commutator_subspace(a).basis_vectors()) rows.append_rows(symbolic_image(n, c));
  return kernel_basis(rows);
}

PropernessSolver::PropernessSolver(const StructureAlgebra& a)
    : algebra_(a),
      der_(derivation_space(a)),
      lie_(lie_derivation_space(a)),
      central_(central_killing_commutators(a)) {
  sum_ = subspace_sum(der_, central_);
  std::vector<Vector> cols = der_.basis_vectors();
  for (auto& v : central_.basis_vectors()) cols.push_back(std::move(v));
  combined_ = Matrix::from_columns(a.dim() * a.dim(), cols);
  dims_ = SpaceDims{lie_.dim(), der_.dim(), central_.dim(), sum_.dim(), der_.dim() + central_.dim() - sum_.dim()};
}

PropernessCertificate PropernessSolver::is_proper(const Matrix& map) const {
  const std::size_t n = algebra_.dim();
  if (map.rows() != n || map.cols() != n) {
    throw InputError(error_code::kDimensionMismatch, "is_proper: map is not an endomap of the algebra");
  }
  const Vector v = flatten(map);
  if (!lie_.contains(v)) throw InputError(error_code::kNotLieDerivation, "is_proper: map is not a Lie derivation");

  PropernessCertificate cert;
  cert.dims = dims_;
  const auto coeffs = solve(combined_, v);
  if (!coeffs) return cert;

  Vector d = zero_vector(n * n);
  Vector ell = zero_vector(n * n);
  for (std::size_t i = 0; i < der_.dim(); ++i) d = add(d, scale((*coeffs)[i], der_.basis_vector(i)));
  for (std::size_t i = 0; i < central_.dim(); ++i)
    ell = add(ell, scale((*coeffs)[der_.dim() + i], central_.basis_vector(i)));
  cert.proper = true;
  cert.witness_d = unflatten(d, n, n);
  cert.witness_ell = unflatten(ell, n, n);
  return cert;
}

PropernessCertificate is_proper(const StructureAlgebra& a, const Matrix& map) {
  return PropernessSolver(a).is_proper(map);
}

bool validate_certificate(const StructureAlgebra& a, const Matrix& map, const PropernessCertificate& cert) {
  if (!is_lie_derivation(a, map)) return false;
  if (!cert.proper) {
    return !subspace_sum(derivation_space(a), central_killing_commutators(a)).contains(flatten(map));
  }
  if (!cert.witness_d || !cert.witness_ell) return false;
  const Matrix& d = *cert.witness_d;
  const Matrix& ell = *cert.witness_ell;
  if (!is_derivation(a, d)) return false;
  const Subspace z = center(a);
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (!z.contains(ell.column(j))) return false;
  for (const auto& c : commutator_subspace(a).basis_vectors())
    if (!is_zero(ell * c)) return false;
  return d + ell == map;
}

LdpResult has_lie_derivation_property(const StructureAlgebra& a) {
  const PropernessSolver solver(a);
  return LdpResult{solver.has_lie_derivation_property(), solver.dims()};
}

BaseWitnessResult find_base_witness(const StarContext& ctx, const Matrix& map) {
  const auto& ext = ctx.ext;
  if (!is_lie_derivation(ext.total, map)) {
    throw InputError(error_code::kNotLieDerivation, "map is not a Lie derivation of A ⋉ X");
  }
  const auto& a = ext.base;
  const std::size_t n = a.dim();
  const std::size_t nvars = n * n;
  const Matrix la = decompose_map(ext, map).la;

  // l_A has range in Z(A), and L_A - l_A is a derivation: K vec(l_A) = K vec(L_A).
  const Matrix range_rows = range_in(center(a));
  const Matrix der_rows = derivation_system(a);
  const Vector der_rhs = der_rows * flatten(la);

  // [l_A(p e_i p), x_s] = 0 = [l_A(q e_i q), x_s].
  const Vector p = ctx.p;
  const Vector q = ctx.q();
  const Matrix sandwich_p = a.left_mult(p) * a.right_mult(p);
  const Matrix sandwich_q = a.left_mult(q) * a.right_mult(q);
  Matrix commute_rows(0, nvars);
  for (std::size_t s = 0; s < ext.module_dim(); ++s) {
    const Vector xs = unit_vector(ext.module_dim(), s);
    const Matrix br = ext.module.left_orbit(xs) - ext.module.right_orbit(xs);
    for (std::size_t i = 0; i < n; ++i) {
      commute_rows.append_rows(br * symbolic_image(n, sandwich_p.column(i)));
      commute_rows.append_rows(br * symbolic_image(n, sandwich_q.column(i)));
    }
  }

  auto rhs_for = [&](bool with_commute) {
    Vector rhs = zero_vector(range_rows.rows());
    rhs.insert(rhs.end(), der_rhs.begin(), der_rhs.end());
    if (with_commute) rhs.resize(rhs.size() + commute_rows.rows());
    return rhs;
  };

  BaseWitnessResult result;
  const auto full = solve(combine({range_rows, der_rows, commute_rows}), rhs_for(true));
  if (full) {
    result.ell_a = unflatten(*full, n, n);
    result.satisfied = {"2.2(i)", "2.2(ii)"};
    return result;
  }
  if (solve(combine({range_rows, der_rows}), rhs_for(false))) {
    result.satisfied = {"2.2(i)"};
    result.failed = {"2.2(ii)"};
  } else {
    result.failed = {"2.2(i)"};
  }
  return result;
}

namespace {

CornerCondition corner_condition(const StarContext& ctx, const Subspace& total_center, const Vector& e,
                                 const std::vector<Vector>& extra_idempotents, std::size_t budget) {
  const auto& a = ctx.ext.base;
  const Corner c = corner(a, e);
  CornerCondition cond;
  cond.corner_dim = c.subspace.dim();

  std::vector<Vector> extras;
  for (const auto& x : extra_idempotents) {
    Idempotent::verified(a, x);
    if (c.subspace.contains(x)) extras.push_back(c.subspace.coordinates(x));
  }
  cond.w_certified = w_subalgebra(c.algebra, extras, budget).certified;

  const Matrix to_corner = a.left_mult(e) * a.right_mult(e) * ctx.ext.algebra_projection();
  const Subspace projected = image(to_corner, total_center);
  const Subspace corner_center = image(c.embedding, center(c.algebra));
  cond.center_match = projected == corner_center;
  return cond;
}

}  // namespace

SufficiencyReport check_sufficiency(const StarContext& ctx, const std::vector<Vector>& extra_idempotents,
                                    std::size_t budget) {
  SufficiencyReport report;
  const LdpResult base = has_lie_derivation_property(ctx.ext.base);
  report.condition_i = base.holds;
  report.ldp_checks.emplace_back("A", base);
  const Subspace z = center(ctx.ext.total);
  report.condition_ii_i = corner_condition(ctx, z, ctx.p, extra_idempotents, budget);
  report.condition_ii_ii = corner_condition(ctx, z, ctx.q(), extra_idempotents, budget);
  return report;
}

SufficiencyReport check_triangular_sufficiency(const TriangularBuild& build, std::size_t budget) {
  SufficiencyReport report;
  const LdpResult lda = has_lie_derivation_property(build.a);
  const LdpResult ldb = has_lie_derivation_property(build.b);
  report.condition_i = lda.holds && ldb.holds;
  report.ldp_checks.emplace_back("A", lda);
  report.ldp_checks.emplace_back("B", ldb);

  const Subspace z = center(build.ext().total);
  auto side = [&](const StructureAlgebra& alg, const Matrix& projection) {
    CornerCondition cond;
    cond.corner_dim = alg.dim();
    cond.w_certified = w_subalgebra(alg, {}, budget).certified;
    cond.center_match = image(projection, z) == center(alg);
    return cond;
  };
  report.condition_ii_i = side(build.a, build.a_projection());
  report.condition_ii_ii = side(build.b, build.b_projection());
  return report;
}

Loyalty loyalty(const StarContext& ctx) {
  const auto& a = ctx.ext.base;
  const auto& x = ctx.ext.module;
  const std::size_t n = a.dim();
  Matrix left_rows(0, n);
  Matrix right_rows(0, n);
  for (std::size_t s = 0; s < x.dim(); ++s) {
    left_rows.append_rows(x.left_orbit(unit_vector(x.dim(), s)));
    right_rows.append_rows(x.right_orbit(unit_vector(x.dim(), s)));
  }
  const Vector p = ctx.p;
  const Vector q = ctx.q();
  const Matrix sandwich_p = a.left_mult(p) * a.right_mult(p);
  const Matrix sandwich_q = a.left_mult(q) * a.right_mult(q);
  return Loyalty{image(sandwich_p, kernel_basis(left_rows)).is_zero(),
                 image(sandwich_q, kernel_basis(right_rows)).is_zero()};
}

TauResult tau_isomorphism(const StarContext& ctx) {
  if (!loyalty(ctx).loyal()) throw InputError(error_code::kNotLoyal, "tau requires a loyal module");
  const auto& a = ctx.ext.base;
  const auto& x = ctx.ext.module;
  const Vector p = ctx.p;
  const Vector q = ctx.q();
  const Subspace z = center(ctx.ext.total);
  const Matrix pi = ctx.ext.algebra_projection();

  TauResult result;
  result.p_projection = image(a.left_mult(p) * a.right_mult(p) * pi, z);
  result.q_projection = image(a.left_mult(q) * a.right_mult(q) * pi, z);
  const Subspace& pp = result.p_projection;
  const Subspace& qp = result.q_projection;

  // For each basis z of P: find w = sum_t c_t Q_t with z x_s = x_s w for all s.
  const auto q_basis = qp.basis_vectors();
  Matrix tau(qp.dim(), pp.dim());
  for (std::size_t i = 0; i < pp.dim(); ++i) {
    const Vector zi = pp.basis_vector(i);
    Matrix system(0, qp.dim());
    Vector rhs;
    for (std::size_t s = 0; s < x.dim(); ++s) {
      const Vector xs = unit_vector(x.dim(), s);
      std::vector<Vector> cols;
      for (const auto& w : q_basis) cols.push_back(x.act_right(xs, w));
      system.append_rows(Matrix::from_columns(x.dim(), cols));
      const Vector lhs = x.act_left(zi, xs);
      rhs.insert(rhs.end(), lhs.begin(), lhs.end());
    }
    const auto sol = system.rows() == 0 ? std::optional<Vector>(zero_vector(qp.dim())) : solve(system, rhs);
    if (!sol) {
      result.diagnostics = "no tau(z) solves z x = x tau(z) for p-projection basis vector " + std::to_string(i);
      return result;
    }
    for (std::size_t t = 0; t < qp.dim(); ++t) tau(t, i) = (*sol)[t];
  }

  result.bijective = pp.dim() == qp.dim() && rank(tau) == pp.dim();

  auto apply_tau = [&](const Vector& v) { return qp.from_coordinates(tau * pp.coordinates(v)); };
  result.multiplicative = true;
  for (std::size_t i = 0; i < pp.dim() && result.multiplicative; ++i)
    for (std::size_t j = 0; j < pp.dim(); ++j) {
      const Vector zi = pp.basis_vector(i);
      const Vector zj = pp.basis_vector(j);
      const Vector prod = a.multiply(zi, zj);
      if (!pp.contains(prod) || apply_tau(prod) != a.multiply(apply_tau(zi), apply_tau(zj))) {
        result.multiplicative = false;
        result.diagnostics = "tau(z_i z_j) != tau(z_i) tau(z_j) at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  result.unital = pp.contains(p) && apply_tau(p) == q;
  result.tau = std::move(tau);
  return result;
}

bool central_ideal_free(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Subspace ideal = center(a);
  while (!ideal.is_zero()) {
    // v = B c stays in the ideal under left and right multiplication by every e_i.
    const Matrix b = embedding_matrix(ideal);
    const Matrix constraints = ideal.constraint_rows();
    Matrix rows(0, ideal.dim());
    for (std::size_t i = 0; i < n; ++i) {
      rows.append_rows(constraints * a.left_basis(i) * b);
      rows.append_rows(constraints * a.right_basis(i) * b);
    }
    Subspace next = image(b, kernel_basis(rows));
    if (next.dim() == ideal.dim()) break;
    ideal = std::move(next);
  }
  return ideal.is_zero();
}

PeirceProducts peirce_products(const StructureAlgebra& a, const Vector& p) {
  const Vector q = sub(a.unit(), p);
  const auto pq = peirce_component(a, p, q).basis_vectors();
  const auto qp = peirce_component(a, q, p).basis_vectors();
  PeirceProducts out{true, true};
  for (const auto& u : pq)
    for (const auto& v : qp) {
      if (!is_zero(a.multiply(u, v))) out.paqap_zero = false;
      if (!is_zero(a.multiply(v, u))) out.qapaq_zero = false;
    }
  return out;
}

Matrix lift_base_map(const TrivialExtension& ext, const Matrix& base_map) {
  const std::size_t n = ext.base_dim();
  const std::size_t m = ext.module_dim();
  if (base_map.rows() != n || base_map.cols() != n) {
    throw InputError(error_code::kDimensionMismatch, "lift_base_map: map is not an endomap of A");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector image_i = base_map.column(i);
    for (std::size_t s = 0; s < m; ++s) {
      const Vector xs = unit_vector(m, s);
      if (ext.module.act_left(image_i, xs) != ext.module.act_right(xs, image_i)) {
        throw InputError(error_code::kLiftPrecondition, "lift_base_map: [L_A(a), x] != 0 for some basis pair");
      }
    }
  }
  Matrix lifted(n + m, n + m);
  lifted.set_block(0, 0, base_map);
  return lifted;
}

}  // namespace liederiv
