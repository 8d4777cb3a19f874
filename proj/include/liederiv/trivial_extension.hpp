#pragma once

#include <cstddef>
#include <optional>

#include "liederiv/algebra.hpp"
#include "liederiv/algebra_ops.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

/// A ⋉ X with product (a, x)(b, y) = (ab, ay + xb). The total basis is the A basis
/// followed by the X basis, so the embeddings and projections are coordinate slices.
struct TrivialExtension {
  StructureAlgebra base;
  Bimodule module;
  StructureAlgebra total;

  std::size_t base_dim() const noexcept { return base.dim(); }
  std::size_t module_dim() const noexcept { return module.dim(); }

  Vector embed_algebra(const Vector& a) const;
  Vector embed_module(const Vector& x) const;
  Vector project_algebra(const Vector& v) const;
  Vector project_module(const Vector& v) const;

  Matrix algebra_embedding() const;   // (n+m) x n
  Matrix module_embedding() const;    // (n+m) x m
  Matrix algebra_projection() const;  // n x (n+m)
  Matrix module_projection() const;   // m x (n+m)
};

/// Throws InputError(invalid-algebra / invalid-module) when the inputs fail validation.
TrivialExtension build_trivial_extension(const StructureAlgebra& a, const Bimodule& x);

/// A trivial extension together with a nontrivial idempotent p of the base algebra
/// satisfying p x q = x on the whole module (q = 1 - p).
struct StarContext {
  TrivialExtension ext;
  Vector p;

  Vector q() const { return sub(ext.base.unit(), p); }
};

struct StarCheck {
  std::optional<StarContext> context;
  std::optional<std::size_t> violating_index;  // first module basis vector with p x q != x

  bool holds() const noexcept { return context.has_value(); }
};

/// Throws InputError(not-idempotent) or InputError(trivial-idempotent).
StarCheck check_star(const TrivialExtension& ext, const Vector& p);

/// Verifies qx = 0 = xp, px = x = xq, ax = papx and xa = xqaq on basis elements.
/// These follow from p x q = x, so a nonempty report under a checked context is a bug.
ValidationReport check_simplifications(const StarContext& ctx);

/// {(a, 0) : a in Z(A), [a, x] = 0 for all x}, computed from A and X alone and
/// cross-checked against the center of the total algebra (InternalError on mismatch).
Subspace center_via_formula(const StarContext& ctx);

/// Tri(A, X, B) realized as (A ⊕ B) ⋉ X with (a ⊕ b)x = ax and x(a ⊕ b) = xb.
struct TriangularBuild {
  StructureAlgebra a;
  StructureAlgebra b;
  Bimodule x;  // left A-, right B-module
  StarContext ctx;  // p = (1_A, 0)

  const TrivialExtension& ext() const noexcept { return ctx.ext; }
  /// Coordinates of A ⊕ B: A occupies [0, a.dim()), B the rest.
  Matrix a_projection() const;  // a.dim() x total dim
  Matrix b_projection() const;  // b.dim() x total dim
};

/// `x` has left_dim == a.dim() and right_dim == b.dim().
TriangularBuild build_triangular(const StructureAlgebra& a, const Bimodule& x, const StructureAlgebra& b);

}  // namespace liederiv
