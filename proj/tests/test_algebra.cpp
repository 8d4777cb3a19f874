#include <gtest/gtest.h>

#include <set>

#include "liederiv/algebra.hpp"
#include "liederiv/algebra_ops.hpp"
#include "liederiv/corpus.hpp"
#include "liederiv/errors.hpp"
#include "support.hpp"

namespace liederiv {
namespace {

const std::vector<std::string> kNamed = {"q", "q2", "q3", "dual", "m2", "t2", "t3", "m4_5d"};

bool has_violation(const ValidationReport& r, const std::string& identity) {
  for (const auto& v : r.violations)
    if (v.identity == identity) return true;
  return false;
}

TEST(Validation, NamedAlgebrasAreValid) {
  for (const auto& name : kNamed) EXPECT_TRUE(validate_algebra(named_algebra(name)).ok()) << name;
}

TEST(Validation, PerturbedMatrixUnitsAreFlagged) {
  const auto m2 = matrix_algebra(2);
  const auto broken = m2.with_constant(1, 2, 0, m2.mul(1, 2, 0) + 1);  // E12 E21 gains an extra E11
  const auto report = validate_algebra(broken);
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(has_violation(report, "(ab)c=a(bc)"));
}

TEST(Validation, UnitViolationIsNamed) {
  const auto q2 = diagonal_algebra(2);
  const StructureAlgebra bad(q2.labels(), q2.tensor(), Vector{1, 0});
  const auto report = validate_algebra(bad);
  EXPECT_TRUE(has_violation(report, "1a=a"));
}

TEST(Validation, RegularAndSubalgebraModules) {
  for (const auto& name : kNamed) {
    const auto a = named_algebra(name);
    EXPECT_TRUE(validate_bimodule(a, regular_bimodule(a)).ok()) << name;
  }
  const auto inst = m4_subalgebra_instance();
  EXPECT_TRUE(validate_bimodule(inst.algebra, *inst.module).ok());
}

TEST(Validation, ZeroedLeftTensorBreaksUnitAction) {
  const auto a = matrix_algebra(2);
  const auto x = regular_bimodule(a);
  const Bimodule zeroed(4, 4, 4, std::vector<Scalar>(x.left_tensor().size()), x.right_tensor());
  EXPECT_TRUE(has_violation(validate_bimodule(a, zeroed), "1x=x"));
}

TEST(Validation, BasisChangePreservesValidity) {
  std::mt19937_64 rng(101);
  for (const auto& name : kNamed) {
    const auto a = named_algebra(name);
    const auto b = change_basis(a, testing::random_invertible(a.dim(), rng));
    EXPECT_TRUE(validate_algebra(b).ok()) << name;
    EXPECT_EQ(center(b).dim(), center(a).dim()) << name;
    EXPECT_EQ(commutator_subspace(b).dim(), commutator_subspace(a).dim()) << name;
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(diagonal_algebra(3)).is_full());
  EXPECT_TRUE(center(dual_numbers()).is_full());
  const auto m2 = matrix_algebra(2);
  const auto z = center(m2);
  EXPECT_EQ(z.dim(), 1u);
  EXPECT_TRUE(z.contains(m2.unit()));
  EXPECT_EQ(center(upper_triangular_algebra(2)).dim(), 1u);
}

TEST(Center, IsUnitalCommutativeSubalgebra) {
  std::mt19937_64 rng(103);
  for (const auto& name : kNamed) {
    const auto a = change_basis(named_algebra(name), testing::random_invertible(named_algebra(name).dim(), rng));
    const auto z = center(a);
    EXPECT_TRUE(z.contains(a.unit())) << name;
    for (const auto& u : z.basis_vectors())
      for (const auto& v : z.basis_vectors()) {
        EXPECT_TRUE(z.contains(a.multiply(u, v))) << name;
        EXPECT_EQ(a.multiply(u, v), a.multiply(v, u)) << name;
      }
  }
}

TEST(Commutators, Examples) {
  EXPECT_TRUE(commutator_subspace(diagonal_algebra(3)).is_zero());
  const auto t2 = upper_triangular_algebra(2);  // E11, E12, E22
  const auto c = commutator_subspace(t2);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.contains(t2.basis(1)));
  const auto m2 = matrix_algebra(2);
  const auto cm = commutator_subspace(m2);
  EXPECT_EQ(cm.dim(), 3u);
  EXPECT_FALSE(cm.contains(m2.unit()));
  EXPECT_TRUE(cm.contains(sub(m2.basis(0), m2.basis(3))));
}

TEST(Corner, Examples) {
  const auto m2 = matrix_algebra(2);
  EXPECT_EQ(corner(m2, m2.unit()).algebra.dim(), 4u);
  const auto c = corner(m2, m2.basis(0));
  EXPECT_EQ(c.algebra.dim(), 1u);
  EXPECT_TRUE(c.subspace.contains(m2.basis(0)));
  EXPECT_EQ(c.algebra.labels().front(), "E11");

  const auto ex = named_algebra("m4_5d");
  const Vector p{0, 0, 0, 1, 0};
  EXPECT_EQ(corner(ex, p).algebra.dim(), 1u);
  EXPECT_EQ(corner(ex, sub(ex.unit(), p)).algebra.dim(), 3u);
  EXPECT_THROW(corner(ex, Vector{0, 0, 1, 0, 0}), InputError);
}

TEST(Corner, UnitIsPAndProductIsInherited) {
  for (const auto& name : kNamed) {
    const auto a = named_algebra(name);
    for (const auto& e : find_idempotents(a).found) {
      if (!e.nontrivial()) continue;
      const auto c = corner(a, e.vector());
      EXPECT_TRUE(validate_algebra(c.algebra).ok()) << name;
      EXPECT_EQ(c.embedding * c.algebra.unit(), e.vector()) << name;
      for (std::size_t i = 0; i < c.algebra.dim(); ++i)
        for (std::size_t j = 0; j < c.algebra.dim(); ++j) {
          const Vector lhs = c.embedding * c.algebra.multiply(c.algebra.basis(i), c.algebra.basis(j));
          const Vector rhs = a.multiply(c.embedding * c.algebra.basis(i), c.embedding * c.algebra.basis(j));
          EXPECT_EQ(lhs, rhs) << name;
        }
    }
  }
}

TEST(Corner, PeirceDimensionsAddUp) {
  for (const auto& name : kNamed) {
    const auto a = named_algebra(name);
    for (const auto& e : find_idempotents(a).found) {
      const Vector p = e.vector();
      const Vector q = sub(a.unit(), p);
      const std::size_t total = peirce_component(a, p, p).dim() + peirce_component(a, p, q).dim() +
                                peirce_component(a, q, p).dim() + peirce_component(a, q, q).dim();
      EXPECT_EQ(total, a.dim()) << name;
    }
  }
}

TEST(Closure, Examples) {
  const auto t2 = upper_triangular_algebra(2);
  EXPECT_TRUE(subalgebra_closure(t2, {t2.basis(0), t2.basis(1), t2.basis(2)}).is_full());
  const auto s = subalgebra_closure(t2, {t2.basis(1)});
  EXPECT_EQ(s.dim(), 1u);
  const auto m2 = matrix_algebra(2);  // E11, E12, E21, E22
  EXPECT_TRUE(subalgebra_closure(m2, {m2.basis(1), m2.basis(2)}).is_full());
  EXPECT_TRUE(subalgebra_closure(m2, {}).is_zero());
}

TEST(Closure, MonotoneAndIdempotent) {
  std::mt19937_64 rng(107);
  for (const auto& name : kNamed) {
    const auto a = named_algebra(name);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Vector> gens = {testing::random_vector(a.dim(), rng)};
      const auto small = subalgebra_closure(a, gens);
      gens.push_back(testing::random_vector(a.dim(), rng));
      const auto big = subalgebra_closure(a, gens);
      EXPECT_TRUE(big.contains(small)) << name;
      EXPECT_EQ(subalgebra_closure(a, small.basis_vectors()), small) << name;
      for (const auto& u : small.basis_vectors())
        for (const auto& v : small.basis_vectors()) EXPECT_TRUE(small.contains(a.multiply(u, v))) << name;
    }
  }
}

std::set<std::string> idempotent_keys(const StructureAlgebra& a) {
  std::set<std::string> keys;
  for (const auto& e : find_idempotents(a).found) keys.insert(vector_key(e.vector()));
  return keys;
}

TEST(Idempotents, MatrixUnits) {
  const auto m2 = matrix_algebra(2);
  const auto keys = idempotent_keys(m2);
  for (const Vector& v : {m2.basis(0), m2.basis(3), m2.unit(), zero_vector(4)}) EXPECT_TRUE(keys.count(vector_key(v)));
}

TEST(Idempotents, PointwiseProductIsExhaustive) {
  const auto res = find_idempotents(diagonal_algebra(3));
  EXPECT_EQ(res.found.size(), 8u);
  EXPECT_TRUE(res.search_exhaustive);
}

TEST(Idempotents, DiagonalPatternsOfTheM4Subalgebra) {
  const auto a = named_algebra("m4_5d");  // a, b, u, c, d
  const auto keys = idempotent_keys(a);
  for (int mask = 0; mask < 16; ++mask) {
    const Vector v{mask & 1, (mask >> 1) & 1, 0, (mask >> 2) & 1, (mask >> 3) & 1};
    EXPECT_TRUE(keys.count(vector_key(v))) << mask;
  }
  // b + c = 1 leaves u free: E22 + E23 is idempotent
  EXPECT_TRUE(keys.count(vector_key(Vector{0, 1, 1, 0, 0})));
}

TEST(Idempotents, EveryResultIsIdempotent) {
  std::mt19937_64 rng(109);
  for (const auto& name : kNamed) {
    const auto base = named_algebra(name);
    const auto a = change_basis(base, testing::random_invertible(base.dim(), rng));
    for (const auto& e : find_idempotents(a, 64).found) EXPECT_EQ(a.multiply(e.vector(), e.vector()), e.vector());
  }
}

TEST(Idempotents, VerifiedRejectsNonIdempotent) {
  const auto a = dual_numbers();
  try {
    Idempotent::verified(a, Vector{0, 1});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), error_code::kNotIdempotent);
  }
  EXPECT_FALSE(Idempotent::verified(a, Vector{1, 0}).nontrivial());
}

TEST(WSubalgebra, Examples) {
  EXPECT_TRUE(w_subalgebra(matrix_algebra(2)).certified);
  EXPECT_TRUE(w_subalgebra(named_algebra("q")).certified);
  const auto dual = w_subalgebra(dual_numbers());
  EXPECT_FALSE(dual.certified);
  EXPECT_EQ(dual.closure.dim(), 1u);
  EXPECT_THROW(w_subalgebra(dual_numbers(), {Vector{0, 1}}), InputError);
}

}  // namespace
}  // namespace liederiv
