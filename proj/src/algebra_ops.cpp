#include "liederiv/algebra_ops.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "liederiv/errors.hpp"

namespace liederiv {

Subspace center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix system(0, n);
  for (std::size_t i = 0; i < n; ++i) system.append_rows(a.right_basis(i) - a.left_basis(i));
  return kernel_basis(system);
}

Subspace commutator_subspace(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = a.bracket(a.basis(i), a.basis(j));
      if (!is_zero(b)) brackets.push_back(std::move(b));
    }
  return Subspace::span(n, brackets);
}

bool is_idempotent(const StructureAlgebra& a, const Vector& v) {
  return v.size() == a.dim() && a.multiply(v, v) == v;
}

Idempotent Idempotent::verified(const StructureAlgebra& a, Vector v) {
  if (v.size() != a.dim()) throw InputError(error_code::kDimensionMismatch, "idempotent has wrong length");
  if (!is_idempotent(a, v)) throw InputError(error_code::kNotIdempotent, "element is not idempotent: p*p != p");
  const bool nontrivial = !is_zero(v) && v != a.unit();
  return Idempotent(std::move(v), nontrivial);
}

Subspace peirce_component(const StructureAlgebra& a, const Vector& e, const Vector& f) {
  return image(a.left_mult(e) * a.right_mult(f), Subspace::full(a.dim()));
}

Corner corner(const StructureAlgebra& a, const Vector& p) {
  if (!is_idempotent(a, p)) throw InputError(error_code::kNotIdempotent, "corner: p is not idempotent");
  const std::size_t n = a.dim();
  const Matrix sandwich = a.left_mult(p) * a.right_mult(p);
  Subspace s = image(sandwich, Subspace::full(n));
  const std::size_t r = s.dim();

  const auto basis = s.basis_vectors();
  std::vector<Scalar> mul(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vector c = s.coordinates(a.multiply(basis[i], basis[j]));
      for (std::size_t k = 0; k < r; ++k) mul[(i * r + j) * r + k] = c[k];
    }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& v = basis[i];
    std::size_t nonzeros = 0;
    for (const auto& x : v) nonzeros += sgn(x) != 0;
    const std::size_t piv = s.pivots()[i];
    labels.push_back(nonzeros == 1 && v[piv] == 1 ? a.labels()[piv] : "w" + std::to_string(i + 1));
  }

  Matrix projection(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector c = s.coordinates(sandwich.column(j));
    for (std::size_t i = 0; i < r; ++i) projection(i, j) = c[i];
  }

  StructureAlgebra algebra(std::move(labels), std::move(mul), s.coordinates(p));
  Matrix embedding = embedding_matrix(s);
  return Corner{std::move(algebra), std::move(s), std::move(embedding), std::move(projection)};
}

Subspace subalgebra_closure(const StructureAlgebra& a, const std::vector<Vector>& generators) {
  Subspace current = Subspace::span(a.dim(), generators);
  while (true) {
    const auto basis = current.basis_vectors();
    std::vector<Vector> products = basis;
    for (const auto& u : basis)
      for (const auto& v : basis) {
        Vector uv = a.multiply(u, v);
        if (!current.contains(uv)) products.push_back(std::move(uv));
      }
    if (products.size() == basis.size()) return current;
    current = Subspace::span(a.dim(), products);
  }
}

namespace {

// Coordinate i is "pure diagonal" when the i-th coordinate of e*e is e_i^2 for
// every e; then e*e == e forces e_i to 0 or 1.
bool pure_diagonal(const StructureAlgebra& a, std::size_t i) {
  const std::size_t n = a.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar expected = (j == i && k == i) ? 1 : 0;
      if (a.mul(j, k, i) != expected) return false;
    }
  return true;
}

bool products_vanish(const StructureAlgebra& a, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (sgn(a.mul(i, j, k)) != 0 || sgn(a.mul(j, i, k)) != 0) return false;
  return true;
}

class Collector {
 public:
  explicit Collector(const StructureAlgebra& a) : a_(a) {}

  bool add(const Vector& v) {
    if (!seen_.insert(vector_key(v)).second) return false;
    found_.push_back(Idempotent::verified(a_, v));
    return true;
  }

  std::vector<Idempotent>& found() { return found_; }

 private:
  const StructureAlgebra& a_;
  std::set<std::string> seen_;
  std::vector<Idempotent> found_;
};

}  // namespace

IdempotentSearch find_idempotents(const StructureAlgebra& a, std::size_t budget) {
  const std::size_t n = a.dim();
  Collector collector(a);
  collector.add(zero_vector(n));
  collector.add(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    if (is_idempotent(a, a.basis(i))) collector.add(a.basis(i));
  }

  // Square-zero coordinate set: every product among these basis vectors vanishes,
  // so e*e == e is linear in them once the remaining coordinates are fixed.
  std::vector<std::size_t> linear_coords;
  std::vector<std::size_t> fixed_coords;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = products_vanish(a, i, i);
    for (auto j : linear_coords) ok = ok && products_vanish(a, i, j);
    (ok ? linear_coords : fixed_coords).push_back(i);
  }

  bool exhaustive = fixed_coords.size() < 63;
  for (auto i : fixed_coords) exhaustive = exhaustive && pure_diagonal(a, i);

  const std::size_t total_patterns =
      fixed_coords.size() < 63 ? (std::size_t{1} << fixed_coords.size()) : std::numeric_limits<std::size_t>::max();
  const std::size_t patterns = std::min(total_patterns, budget);
  if (patterns < total_patterns) exhaustive = false;

  for (std::size_t mask = 0; mask < patterns; ++mask) {
    Vector f = zero_vector(n);
    for (std::size_t b = 0; b < fixed_coords.size(); ++b)
      if ((mask >> b) & 1U) f[fixed_coords[b]] = 1;

    const Vector rhs = sub(f, a.multiply(f, f));
    if (linear_coords.empty()) {
      if (is_zero(rhs)) collector.add(f);
      continue;
    }
    // (f + u)^2 - (f + u) = f^2 - f + (f u + u f - u) because u^2 = 0.
    std::vector<Vector> columns;
    for (auto k : linear_coords) {
      const Vector ek = a.basis(k);
      columns.push_back(sub(add(a.multiply(f, ek), a.multiply(ek, f)), ek));
    }
    const Matrix system = Matrix::from_columns(n, columns);
    const auto sol = solve(system, rhs);
    if (!sol) continue;
    Vector particular = f;
    for (std::size_t c = 0; c < linear_coords.size(); ++c) particular[linear_coords[c]] += (*sol)[c];
    collector.add(particular);

    const Subspace kernel = kernel_basis(system);
    if (!kernel.is_zero()) exhaustive = false;
    for (std::size_t d = 0; d < kernel.dim(); ++d) {
      Vector e = particular;
      const Vector dir = kernel.basis_vector(d);
      for (std::size_t c = 0; c < linear_coords.size(); ++c) e[linear_coords[c]] += dir[c];
      collector.add(e);
    }
  }

  // Sums of orthogonal idempotents are idempotent; close under that operation.
  const std::size_t cap = 4 * budget + n;
  bool grew = true;
  while (grew && collector.found().size() < cap) {
    grew = false;
    const auto snapshot = collector.found();
    for (std::size_t i = 0; i < snapshot.size() && collector.found().size() < cap; ++i)
      for (std::size_t j = i + 1; j < snapshot.size() && collector.found().size() < cap; ++j) {
        const Vector& e = snapshot[i].vector();
        const Vector& f = snapshot[j].vector();
        if (is_zero(e) || is_zero(f)) continue;
        if (!is_zero(a.multiply(e, f)) || !is_zero(a.multiply(f, e))) continue;
        grew = collector.add(add(e, f)) || grew;
      }
  }

  return IdempotentSearch{std::move(collector.found()), exhaustive, patterns};
}

WSubalgebra w_subalgebra(const StructureAlgebra& a, const std::vector<Vector>& extra_idempotents,
                         std::size_t budget) {
  std::vector<Vector> generators = commutator_subspace(a).basis_vectors();
  for (const auto& e : extra_idempotents) generators.push_back(Idempotent::verified(a, e).vector());
  for (const auto& e : find_idempotents(a, budget).found) generators.push_back(e.vector());
  Subspace closure = subalgebra_closure(a, generators);
  const bool certified = closure.is_full();
  return WSubalgebra{std::move(closure), certified};
}

}  // namespace liederiv
