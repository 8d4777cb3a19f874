#include <gtest/gtest.h>

#include "liederiv/errors.hpp"
#include "liederiv/rref.hpp"
#include "liederiv/subspace.hpp"
#include "support.hpp"

namespace liederiv {
namespace {

using testing::bareiss_rank;
using testing::random_matrix;
using testing::random_vector;

TEST(Scalar, ParsesAndFormatsCanonically) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(parse_scalar("-2/6"), Scalar(-1, 3));
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_EQ(format_scalar(Scalar(3, 2)), "3/2");
  EXPECT_EQ(format_scalar(Scalar(4)), "4");
  EXPECT_EQ(format_scalar(Scalar(0)), "0");
  EXPECT_EQ(format_scalar(parse_scalar("-10/4")), "-5/2");
}

TEST(Scalar, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "1/2/3", " 1"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const InputError& e) {
      EXPECT_EQ(e.code(), error_code::kBadScalar);
    }
  }
}

TEST(Scalar, FormatParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = testing::small_scalar(rng, 50);
    EXPECT_EQ(parse_scalar(format_scalar(s)), s);
  }
}

TEST(Matrix, FlattenIsColumnMajor) {
  Matrix m(2, 3);
  m(1, 2) = 5;
  const Vector v = flatten(m);
  EXPECT_EQ(v[flat_index(1, 2, 2)], Scalar(5));
  EXPECT_EQ(flat_index(1, 2, 2), 5u);
  EXPECT_EQ(unflatten(v, 2, 3), m);
}

TEST(Matrix, ProductIsAssociative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = random_matrix(3, 4, rng);
    const Matrix b = random_matrix(4, 2, rng);
    const Matrix c = random_matrix(2, 5, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  }
}

TEST(Rref, ParallelAndSerialAgreeWithBareissRank) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 90;
    const std::size_t cols = 1 + rng() % 12;
    Matrix m = random_matrix(rows, cols, rng, 0.6);
    if (trial % 3 == 0 && rows > 2) {
      // force dependent rows
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) + 2 * m(1, c);
    }
    const auto par = rref(m);
    const auto ser = rref_serial(m);
    EXPECT_EQ(par.reduced, ser.reduced);
    EXPECT_EQ(par.pivots, ser.pivots);
    EXPECT_EQ(par.rank(), bareiss_rank(m));
  }
}

TEST(Rref, IsIdempotentAndRowEquivalent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(1 + rng() % 8, 1 + rng() % 8, rng);
    const auto r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(Subspace::span(m.cols(), m), Subspace::span(m.cols(), r.reduced));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      EXPECT_EQ(r.reduced(i, r.pivots[i]), Scalar(1));
      for (std::size_t k = 0; k < m.rows(); ++k)
        if (k != i) {
          EXPECT_EQ(r.reduced(k, r.pivots[i]), Scalar(0));
        }
    }
  }
}

TEST(Rref, ZeroAndEmptyMatrices) {
  EXPECT_EQ(rank(Matrix(4, 3)), 0u);
  EXPECT_EQ(rank(Matrix(0, 3)), 0u);
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
}

TEST(Subspace, KernelDimensionAndMembership) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(1 + rng() % 6, 1 + rng() % 8, rng, 0.5);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), m.cols() - bareiss_rank(m));
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Subspace, SolveReturnsCanonicalSolution) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(1 + rng() % 5, 1 + rng() % 7, rng, 0.4);
    const Vector x = random_vector(m.cols(), rng);
    const Vector b = m * x;
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, b);
    // free columns are zero
    const auto r = rref(m);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::find(r.pivots.begin(), r.pivots.end(), c) == r.pivots.end()) {
        EXPECT_EQ((*sol)[c], Scalar(0));
      }
    EXPECT_EQ(solve(m, b), sol);
  }
  Matrix m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  EXPECT_FALSE(solve(m, Vector{1, 2}).has_value());
}

TEST(Subspace, SumIntersectionDimensionFormula) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const Subspace u = Subspace::span(n, random_matrix(rng() % (n + 1), n, rng, 0.5));
    const Subspace v = Subspace::span(n, random_matrix(rng() % (n + 1), n, rng, 0.5));
    const Subspace s = subspace_sum(u, v);
    const Subspace i = subspace_intersect(u, v);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(v));
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(v.contains(i));
    EXPECT_EQ(s.dim(), bareiss_rank(vstack(u.basis(), v.basis())));
  }
}

TEST(Subspace, ModularLaw) {
  // U ⊆ W implies U + (V ∩ W) == (U + V) ∩ W
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const Subspace w = Subspace::span(n, random_matrix(1 + rng() % n, n, rng, 0.4));
    const Subspace u = image(embedding_matrix(w) * random_matrix(w.dim(), w.dim(), rng), Subspace::full(w.dim()));
    const Subspace v = Subspace::span(n, random_matrix(1 + rng() % n, n, rng, 0.4));
    ASSERT_TRUE(w.contains(u));
    EXPECT_EQ(subspace_sum(u, subspace_intersect(v, w)), subspace_intersect(subspace_sum(u, v), w));
  }
}

TEST(Subspace, CanonicalFormIgnoresSpanningSet) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Matrix gens = random_matrix(1 + rng() % n, n, rng, 0.3);
    const Matrix mixed = testing::random_invertible(gens.rows(), rng) * gens;
    const Subspace a = Subspace::span(n, gens);
    const Subspace b = Subspace::span(n, mixed);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.basis(), b.basis());
  }
}

TEST(Subspace, CoordinatesRoundTrip) {
  std::mt19937_64 rng(43);
  const Subspace s = Subspace::span(5, random_matrix(3, 5, rng, 0.2));
  for (int i = 0; i < 20; ++i) {
    const Vector c = random_vector(s.dim(), rng);
    const Vector v = s.from_coordinates(c);
    EXPECT_TRUE(s.contains(v));
    EXPECT_EQ(s.coordinates(v), c);
  }
}

TEST(Subspace, ConstraintRowsCutOutTheSubspace) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Subspace s = Subspace::span(n, random_matrix(rng() % (n + 1), n, rng, 0.4));
    EXPECT_EQ(kernel_basis(s.constraint_rows()), s);
  }
  EXPECT_TRUE(kernel_basis(Subspace::zero(3).constraint_rows()).is_zero());
}

}  // namespace
}  // namespace liederiv
