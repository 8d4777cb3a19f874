#pragma once

#include <cstddef>
#include <vector>

#include "liederiv/algebra.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

/// Z(A) = {z : [z, e_i] = 0 for all i}.
Subspace center(const StructureAlgebra& a);

/// span{[e_i, e_j] : i < j}.
Subspace commutator_subspace(const StructureAlgebra& a);

bool is_idempotent(const StructureAlgebra& a, const Vector& v);

/// An element p with p * p == p, checked at construction. q = 1 - p is derived on demand.
class Idempotent {
 public:
  /// Throws InputError(not-idempotent) unless v * v == v.
  static Idempotent verified(const StructureAlgebra& a, Vector v);

  const Vector& vector() const noexcept { return vector_; }
  /// p != 0 and p != 1.
  bool nontrivial() const noexcept { return nontrivial_; }
  /// 1 - p.
  Vector complement(const StructureAlgebra& a) const { return sub(a.unit(), vector_); }

 private:
  Idempotent(Vector v, bool nontrivial) : vector_(std::move(v)), nontrivial_(nontrivial) {}

  Vector vector_;
  bool nontrivial_ = false;
};

/// e A f as a subspace of A.
Subspace peirce_component(const StructureAlgebra& a, const Vector& e, const Vector& f);

/// The corner algebra pAp, re-based on the canonical basis of the subspace {pap}
/// and carrying p as its unit.
struct Corner {
  StructureAlgebra algebra;
  Subspace subspace;   // pAp inside A
  Matrix embedding;    // dim A x dim pAp, corner coordinates -> A coordinates
  Matrix projection;   // dim pAp x dim A, a -> coordinates of pap
};

/// Throws InputError(not-idempotent) when p * p != p.
Corner corner(const StructureAlgebra& a, const Vector& p);

/// Smallest subspace containing the generators and closed under multiplication.
/// The unit is not adjoined.
Subspace subalgebra_closure(const StructureAlgebra& a, const std::vector<Vector>& generators);

struct IdempotentSearch {
  std::vector<Idempotent> found;
  bool search_exhaustive = false;
  std::size_t patterns_tried = 0;
};

inline constexpr std::size_t kDefaultIdempotentBudget = 256;

/// Collects verified idempotents: 0, 1, idempotent basis vectors, solutions of
/// e^2 = e over 0/1 support patterns (coordinates whose mutual products vanish are
/// solved linearly), and sums of orthogonal pairs, to a fixpoint.
/// `budget` caps the number of support patterns examined.
IdempotentSearch find_idempotents(const StructureAlgebra& a, std::size_t budget = kDefaultIdempotentBudget);

struct WSubalgebra {
  Subspace closure;
  /// closure == A. When false the closure is only a lower bound for W_A.
  bool certified = false;
};

/// Lower approximation of the smallest subalgebra containing every commutator and
/// every idempotent. Extra idempotent witnesses must satisfy e^2 = e.
WSubalgebra w_subalgebra(const StructureAlgebra& a, const std::vector<Vector>& extra_idempotents = {},
                         std::size_t budget = kDefaultIdempotentBudget);

}  // namespace liederiv
