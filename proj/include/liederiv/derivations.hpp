#pragma once

#include <string>
#include <vector>

#include "liederiv/algebra.hpp"
#include "liederiv/subspace.hpp"
#include "liederiv/trivial_extension.hpp"

namespace liederiv {

// Endomaps of an n-dimensional algebra are n x n matrices acting on coordinate
// columns (column j is the image of e_j). For subspace arithmetic they are
// flattened column-major (see flatten()), giving vectors of length n^2.

/// Which basis pairs generate a defining system.
enum class PairRange {
  kReduced,  // derivations: all ordered pairs; Lie derivations: i < j (antisymmetry)
  kFull,     // every ordered pair, for cross-checking the reduced systems
};

/// Rows R over the flattened endomap with D a derivation iff R vec(D) == 0.
Matrix derivation_system(const StructureAlgebra& a, PairRange range = PairRange::kReduced);
/// Rows R with L a Lie derivation iff R vec(L) == 0.
Matrix lie_derivation_system(const StructureAlgebra& a, PairRange range = PairRange::kReduced);

Subspace derivation_space(const StructureAlgebra& a, PairRange range = PairRange::kReduced);
Subspace lie_derivation_space(const StructureAlgebra& a, PairRange range = PairRange::kReduced);
/// span{ad_{e_i}}, ad_a(b) = [a, b].
Subspace inner_derivations(const StructureAlgebra& a);

bool is_derivation(const StructureAlgebra& a, const Matrix& map);
bool is_lie_derivation(const StructureAlgebra& a, const Matrix& map);

/// L(a, x) = (L_A(a) + T(x), L_X(a) + S(x)) on A ⋉ X.
struct BlockDecomposition {
  Matrix la;  // A -> A, n x n
  Matrix lx;  // A -> X, m x n
  Matrix t;   // X -> A, n x m
  Matrix s;   // X -> X, m x m
};

/// Throws InputError(dimension-mismatch) unless map is (n+m) x (n+m).
BlockDecomposition decompose_map(const TrivialExtension& ext, const Matrix& map);
Matrix assemble(const TrivialExtension& ext, const BlockDecomposition& blocks);

/// A named family of linear conditions on the flattened endomap of A ⋉ X.
struct LabeledSystem {
  std::string label;
  Matrix rows;
};

/// Conditions (a), (b), (c) characterizing Lie derivations of A ⋉ X through the
/// blocks, written in terms of A and the actions on X only.
std::vector<LabeledSystem> lie_block_conditions(const TrivialExtension& ext);
/// Conditions (i), (ii), (iii) characterizing derivations of A ⋉ X through the blocks.
std::vector<LabeledSystem> derivation_block_conditions(const TrivialExtension& ext);

/// Kernel of all stacked conditions.
Subspace solution_space(const std::vector<LabeledSystem>& systems, std::size_t ambient_dim);

struct ConditionReport {
  std::vector<std::string> satisfied;
  std::vector<std::string> failed;
  /// Direct membership of the assembled map in the corresponding space of the total algebra.
  bool in_space = false;

  bool ok() const noexcept { return failed.empty(); }
};

/// Evaluates (a)-(c) on the blocks. InternalError if the verdict disagrees with
/// direct membership in LieDer(A ⋉ X).
ConditionReport check_lie_conditions(const TrivialExtension& ext, const BlockDecomposition& d);
/// Evaluates (i)-(iii) on the blocks. InternalError if the verdict disagrees with
/// direct membership in Der(A ⋉ X).
ConditionReport check_derivation_conditions(const TrivialExtension& ext, const BlockDecomposition& d);

}  // namespace liederiv
