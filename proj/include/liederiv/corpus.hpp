#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liederiv/algebra.hpp"
#include "liederiv/trivial_extension.hpp"

namespace liederiv {

/// An expected fact about an instance, tagged with where the value comes from.
struct Expectation {
  using Value = std::variant<bool, std::int64_t, std::string>;
  Value value;
  std::string provenance;  // "paper", "trivial" or "derived"
  std::string oracle;      // how a derived value was obtained
};

struct TriangularParts {
  StructureAlgebra a;
  Bimodule x;
  StructureAlgebra b;
};

struct CorpusInstance {
  std::string name;
  StructureAlgebra algebra;            // the base algebra (A ⊕ B for triangular instances)
  std::optional<Bimodule> module;      // present for trivial extensions
  std::optional<Vector> idempotent;    // p, present when p x q = x is expected
  std::optional<TriangularParts> triangular;
  std::optional<Matrix> base_map;      // a Lie derivation of the base algebra, when one is singled out
  std::map<std::string, Expectation> expected;
};

/// Named algebras used by the corpus and the family descriptors:
/// q, q2, q3, dual, m2, t2, t3, m4_5d.
StructureAlgebra named_algebra(const std::string& name);

/// X = k x l matrices, with A (spanned by k x k matrices) acting by left and
/// B (spanned by l x l matrices) by right multiplication. X basis: matrix units, row-major.
Bimodule rectangular_bimodule(const std::vector<Matrix>& left_basis, const std::vector<Matrix>& right_basis,
                              std::size_t rows, std::size_t cols);

/// The 5-dimensional subalgebra of M4 spanned by E11, E22, E23, E33, E44 with
/// X = Q, (a_ij) x = a33 x, x (a_ij) = x a22, and p = E33.
CorpusInstance m4_subalgebra_instance();

/// diag(a, a, a, d) + span{E12, E13, E23} inside T4, X = Q with (a_ij) x = a44 x,
/// x (a_ij) = x a11, p = E44, together with a non-proper Lie derivation of A
/// satisfying [L(a), x] = 0, whose lift to A ⋉ X is again non-proper.
CorpusInstance lift_counterexample_instance();

CorpusInstance triangular_instance(std::string name, const std::vector<Matrix>& a_basis,
                                   std::vector<std::string> a_labels, const std::vector<Matrix>& b_basis,
                                   std::vector<std::string> b_labels, std::size_t rows, std::size_t cols);

std::vector<CorpusInstance> builtin_corpus();

/// Family descriptors (closed set):
///   triangular(nA,mX,nB)   Q^nA and Q^nB with a seeded (Q^nA, Q^nB)-bimodule of dim mX
///   direct_sum(A,B)        named algebras
///   corner_of(A)           corner at a seeded nontrivial idempotent of A
///   trivial_extension_of(A)  A ⋉ A with the regular bimodule
///   scalar_extension(A)    A ⊗ Q[t]/(t^2 - d), d seeded
/// Pure in (descriptor, seed). Throws InputError(unknown-family) on anything else.
std::vector<CorpusInstance> generate_family(const std::string& descriptor, std::uint64_t seed);

/// Rebuilds the star context of an instance (requires module and idempotent).
std::optional<StarContext> star_context(const CorpusInstance& inst);
std::optional<TriangularBuild> triangular_build(const CorpusInstance& inst);

}  // namespace liederiv
