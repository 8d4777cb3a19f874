#include <gtest/gtest.h>

#include <algorithm>

#include "liederiv/algebra_ops.hpp"
#include "liederiv/corpus.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"
#include "support.hpp"

namespace liederiv {
namespace {

std::vector<StructureAlgebra> sample_algebras() {
  std::vector<StructureAlgebra> out;
  std::mt19937_64 rng(301);
  for (const char* name : {"q", "q2", "q3", "dual", "m2", "t2", "t3", "m4_5d"}) {
    const auto a = named_algebra(name);
    out.push_back(a);
    out.push_back(change_basis(a, testing::random_invertible(a.dim(), rng)));
  }
  out.push_back(direct_sum(dual_numbers(), upper_triangular_algebra(2)));
  out.push_back(change_basis(out.back(), testing::random_invertible(out.back().dim(), rng)));
  out.push_back(tensor_product(dual_numbers(), dual_numbers()));
  return out;
}

std::vector<StarContext> star_contexts() {
  std::vector<StarContext> out;
  for (const auto& inst : builtin_corpus())
    if (auto ctx = star_context(inst)) out.push_back(*ctx);
  for (const char* d : {"triangular(1,2,1)", "triangular(2,2,1)", "triangular(1,1,2)"})
    for (const auto& inst : generate_family(d, 9)) out.push_back(*star_context(inst));
  return out;
}

TEST(Derivations, DimensionsMatchBareissOracle) {
  for (const auto& a : sample_algebras()) {
    EXPECT_EQ(derivation_space(a).dim(), testing::oracle_dim_der(a));
    EXPECT_EQ(lie_derivation_space(a).dim(), testing::oracle_dim_lie_der(a));
  }
}

TEST(Derivations, Examples) {
  EXPECT_TRUE(derivation_space(named_algebra("q")).is_zero());
  EXPECT_EQ(derivation_space(upper_triangular_algebra(2)).dim(), 2u);
  EXPECT_EQ(lie_derivation_space(upper_triangular_algebra(2)).dim(), 4u);
  const auto m2 = matrix_algebra(2);
  EXPECT_EQ(derivation_space(m2).dim(), 3u);
  EXPECT_EQ(derivation_space(m2), inner_derivations(m2));
  EXPECT_TRUE(lie_derivation_space(diagonal_algebra(3)).is_full());
  EXPECT_TRUE(inner_derivations(diagonal_algebra(3)).is_zero());
}

TEST(Derivations, ReducedAndFullPairRangesAgree) {
  for (const auto& a : sample_algebras()) {
    EXPECT_EQ(derivation_space(a, PairRange::kReduced), derivation_space(a, PairRange::kFull));
    EXPECT_EQ(lie_derivation_space(a, PairRange::kReduced), lie_derivation_space(a, PairRange::kFull));
  }
}

TEST(Derivations, ChainOfInclusions) {
  for (const auto& a : sample_algebras()) {
    const auto inner = inner_derivations(a);
    const auto der = derivation_space(a);
    const auto lie = lie_derivation_space(a);
    EXPECT_EQ(inner.dim(), a.dim() - center(a).dim());
    EXPECT_TRUE(der.contains(inner));
    EXPECT_TRUE(lie.contains(der));
    for (const auto& v : der.basis_vectors()) {
      const Matrix d = unflatten(v, a.dim(), a.dim());
      EXPECT_TRUE(is_zero(d * a.unit()));
      EXPECT_TRUE(is_derivation(a, d));
    }
    for (const auto& v : lie.basis_vectors()) EXPECT_TRUE(is_lie_derivation(a, unflatten(v, a.dim(), a.dim())));
  }
}

TEST(Derivations, PredicatesRejectNonMembers) {
  const auto m2 = matrix_algebra(2);
  EXPECT_FALSE(is_lie_derivation(m2, Matrix::identity(4)));
  EXPECT_FALSE(is_derivation(m2, Matrix::identity(4)));
  EXPECT_FALSE(is_derivation(m2, Matrix::identity(3)));
}

TEST(BlockDecomposition, IdentityAndRoundTrip) {
  std::mt19937_64 rng(307);
  for (const auto& ctx : star_contexts()) {
    const auto& ext = ctx.ext;
    const std::size_t n = ext.base_dim();
    const std::size_t m = ext.module_dim();
    const auto id = decompose_map(ext, Matrix::identity(n + m));
    EXPECT_EQ(id.la, Matrix::identity(n));
    EXPECT_EQ(id.s, Matrix::identity(m));
    EXPECT_TRUE(id.lx.is_zero());
    EXPECT_TRUE(id.t.is_zero());
    const Matrix r = testing::random_matrix(n + m, n + m, rng);
    EXPECT_EQ(assemble(ext, decompose_map(ext, r)), r);
  }
  const auto ctx = star_contexts().front();
  EXPECT_THROW(decompose_map(ctx.ext, Matrix::identity(2)), InputError);
}

TEST(BlockDecomposition, AdjointOfPHasNoTBlock) {
  for (const auto& ctx : star_contexts()) {
    const auto& ext = ctx.ext;
    const Vector p = ext.embed_algebra(ctx.p);
    const std::size_t n = ext.total.dim();
    Matrix ad(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector col = ext.total.bracket(p, ext.total.basis(j));
      for (std::size_t i = 0; i < n; ++i) ad(i, j) = col[i];
    }
    EXPECT_TRUE(decompose_map(ext, ad).t.is_zero());
  }
}

TEST(BlockConditions, CarveOutTheDirectSpaces) {
  for (const auto& ctx : star_contexts()) {
    const auto& ext = ctx.ext;
    const std::size_t n = ext.total.dim();
    EXPECT_EQ(solution_space(lie_block_conditions(ext), n * n), lie_derivation_space(ext.total));
    EXPECT_EQ(solution_space(derivation_block_conditions(ext), n * n), derivation_space(ext.total));
  }
}

TEST(BlockConditions, ReportsAgreeWithMembership) {
  std::mt19937_64 rng(311);
  for (const auto& ctx : star_contexts()) {
    const auto& ext = ctx.ext;
    const std::size_t n = ext.total.dim();
    const auto lie = lie_derivation_space(ext.total);
    const auto der = derivation_space(ext.total);
    for (int trial = 0; trial < 4; ++trial) {
      const Vector v = lie.from_coordinates(testing::random_vector(lie.dim(), rng));
      const auto blocks = decompose_map(ext, unflatten(v, n, n));
      const auto lrep = check_lie_conditions(ext, blocks);
      EXPECT_TRUE(lrep.ok());
      EXPECT_TRUE(lrep.in_space);
      const auto drep = check_derivation_conditions(ext, blocks);
      EXPECT_EQ(drep.ok(), der.contains(v));
    }
    const auto zero = decompose_map(ext, Matrix(n, n));
    EXPECT_TRUE(check_lie_conditions(ext, zero).ok());
    EXPECT_TRUE(check_derivation_conditions(ext, zero).ok());
  }
}

TEST(BlockConditions, LieButNotDerivation) {
  std::size_t seen = 0;
  for (const auto& ctx : star_contexts()) {
    const auto& ext = ctx.ext;
    const std::size_t n = ext.total.dim();
    const auto der = derivation_space(ext.total);
    for (const auto& v : lie_derivation_space(ext.total).basis_vectors()) {
      if (der.contains(v)) continue;
      const auto blocks = decompose_map(ext, unflatten(v, n, n));
      EXPECT_TRUE(check_lie_conditions(ext, blocks).ok());
      EXPECT_FALSE(check_derivation_conditions(ext, blocks).ok());
      ++seen;
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(BlockConditions, PerturbedTBlockBreaksConditionB) {
  for (const auto& inst : builtin_corpus()) {
    const auto build = triangular_build(inst);
    if (!build || build->x.dim() == 0) continue;
    const auto& ext = build->ext();
    const std::size_t n = ext.total.dim();
    auto blocks = decompose_map(ext, Matrix(n, n));
    blocks.t(0, 0) = 1;
    const auto rep = check_lie_conditions(ext, blocks);
    EXPECT_FALSE(rep.in_space) << inst.name;
    EXPECT_TRUE(std::find(rep.failed.begin(), rep.failed.end(), "(b)") != rep.failed.end()) << inst.name;
  }
}

TEST(BlockConditions, TriangularLieDerivationsHaveNoTBlock) {
  for (int na = 1; na <= 2; ++na)
    for (int mx = 0; mx <= 3; ++mx)
      for (int nb = 1; nb <= 2; ++nb) {
        const std::string d =
            "triangular(" + std::to_string(na) + "," + std::to_string(mx) + "," + std::to_string(nb) + ")";
        const auto inst = generate_family(d, 13).front();
        const auto ctx = star_context(inst);
        const std::size_t n = ctx->ext.total.dim();
        for (const auto& v : lie_derivation_space(ctx->ext.total).basis_vectors())
          EXPECT_TRUE(decompose_map(ctx->ext, unflatten(v, n, n)).t.is_zero()) << d;
      }
}

}  // namespace
}  // namespace liederiv
