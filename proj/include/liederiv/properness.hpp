#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/algebra.hpp"
#include "liederiv/algebra_ops.hpp"
#include "liederiv/subspace.hpp"
#include "liederiv/trivial_extension.hpp"

namespace liederiv {

/// C(A) = {l : l(A) ⊆ Z(A), l([A, A]) = 0}, as a subspace of flattened endomaps.
/// dim C(A) == (dim A - dim [A, A]) * dim Z(A).
Subspace central_killing_commutators(const StructureAlgebra& a);

struct SpaceDims {
  std::size_t lie_der = 0;
  std::size_t der = 0;
  std::size_t central_killing_commutators = 0;
  std::size_t sum = 0;           // dim(Der + C)
  std::size_t intersection = 0;  // dim(Der ∩ C)
};

/// Decomposition L = D + l with D a derivation and l central-valued killing
/// commutators, or an exact refusal (L outside Der + C).
struct PropernessCertificate {
  bool proper = false;
  std::optional<Matrix> witness_d;
  std::optional<Matrix> witness_ell;
  SpaceDims dims;
};

/// Der, LieDer and C of one algebra, computed once and reused across maps.
class PropernessSolver {
 public:
  explicit PropernessSolver(const StructureAlgebra& a);

  const StructureAlgebra& algebra() const noexcept { return algebra_; }
  const Subspace& derivations() const noexcept { return der_; }
  const Subspace& lie_derivations() const noexcept { return lie_; }
  const Subspace& central() const noexcept { return central_; }
  const Subspace& sum() const noexcept { return sum_; }
  const SpaceDims& dims() const noexcept { return dims_; }

  /// Every Lie derivation is proper: LieDer == Der + C.
  bool has_lie_derivation_property() const { return lie_ == sum_; }

  /// Throws InputError(input-not-lie-derivation) unless `map` is a Lie derivation.
  /// Witnesses are canonical: every free coordinate of the solved system is zero.
  PropernessCertificate is_proper(const Matrix& map) const;

 private:
  StructureAlgebra algebra_;
  Subspace der_;
  Subspace lie_;
  Subspace central_;
  Subspace sum_;
  Matrix combined_;  // columns: basis of Der, then basis of C
  SpaceDims dims_;
};

PropernessCertificate is_proper(const StructureAlgebra& a, const Matrix& map);

/// Re-checks a certificate by substitution (proper) or non-membership (not proper).
bool validate_certificate(const StructureAlgebra& a, const Matrix& map, const PropernessCertificate& cert);

struct LdpResult {
  bool holds = false;
  SpaceDims dims;
};

LdpResult has_lie_derivation_property(const StructureAlgebra& a);

/// Outcome of searching for l_A : A -> Z(A) with L_A - l_A a derivation of A and
/// [l_A(pap), x] = 0 = [l_A(qaq), x]. The witness exists exactly when L is proper.
struct BaseWitnessResult {
  std::optional<Matrix> ell_a;
  std::vector<std::string> satisfied;  // condition labels "2.2(i)", "2.2(ii)"
  std::vector<std::string> failed;
};

/// Throws InputError(input-not-lie-derivation) unless `map` is a Lie derivation of A ⋉ X.
BaseWitnessResult find_base_witness(const StarContext& ctx, const Matrix& map);

/// Status of one corner hypothesis: W of the corner certified full, or the corner
/// center matching the projection of Z(A ⋉ X), or neither.
struct CornerCondition {
  bool w_certified = false;
  bool center_match = false;
  std::size_t corner_dim = 0;

  bool holds() const noexcept { return w_certified || center_match; }
  std::string status() const { return w_certified ? "w_certified" : center_match ? "center_match" : "inconclusive"; }
};

struct SufficiencyReport {
  bool condition_i = false;
  /// Lie derivation property checks behind condition I: {"A", ...} for A ⋉ X,
  /// {"A", ...}, {"B", ...} for triangular algebras.
  std::vector<std::pair<std::string, LdpResult>> ldp_checks;
  CornerCondition condition_ii_i;
  CornerCondition condition_ii_ii;

  bool guaranteed() const noexcept { return condition_i && condition_ii_i.holds() && condition_ii_ii.holds(); }
};

/// Sufficient conditions for A ⋉ X to have the Lie derivation property: A has it,
/// and each corner pAp, qAq has W certified full or its center equal to the
/// projection of Z(A ⋉ X). `extra_idempotents` (in A coordinates) seed the W search.
SufficiencyReport check_sufficiency(const StarContext& ctx, const std::vector<Vector>& extra_idempotents = {},
                                    std::size_t budget = kDefaultIdempotentBudget);

/// Triangular specialization with the corners replaced by A and B themselves.
SufficiencyReport check_triangular_sufficiency(const TriangularBuild& build,
                                               std::size_t budget = kDefaultIdempotentBudget);

struct Loyalty {
  bool left = false;   // aX = 0 implies pap = 0
  bool right = false;  // Xa = 0 implies qaq = 0

  bool loyal() const noexcept { return left && right; }
};

Loyalty loyalty(const StarContext& ctx);

struct TauResult {
  std::optional<Matrix> tau;  // dim Q x dim P, canonical-basis coordinates
  Subspace p_projection;      // {pap : (a, 0) in Z(A ⋉ X)} in A coordinates
  Subspace q_projection;      // {qaq : (a, 0) in Z(A ⋉ X)}
  bool bijective = false;
  bool multiplicative = false;
  bool unital = false;  // tau(p-part of 1) == q-part of 1
  std::string diagnostics;
};

/// Solves pap x = x tau(pap) on a basis of the p-projection of the center.
/// Throws InputError(not-loyal) for a context that is not loyal.
TauResult tau_isomorphism(const StarContext& ctx);

/// The largest two-sided ideal of A inside Z(A) is zero.
bool central_ideal_free(const StructureAlgebra& a);

struct PeirceProducts {
  bool paqap_zero = false;  // pAqAp == 0
  bool qapaq_zero = false;  // qApAq == 0
};

PeirceProducts peirce_products(const StructureAlgebra& a, const Vector& p);

/// (a, x) -> (L_A(a), 0). Requires [L_A(a), x] = 0 for all a, x
/// (InputError(lift-precondition) otherwise); the lift of a non-proper L_A is
/// then a non-proper Lie derivation of A ⋉ X.
Matrix lift_base_map(const TrivialExtension& ext, const Matrix& base_map);

}  // namespace liederiv
