#include "liederiv/corpus.hpp"

#include <random>
#include <regex>

#include "liederiv/algebra_ops.hpp"
#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::vector<Matrix> scalar_basis() { return {Matrix::identity(1)}; }

std::vector<Matrix> diagonal_basis(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_matrix(n, i, i));
  return out;
}

std::vector<Matrix> full_basis(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(unit_matrix(n, i, j));
  return out;
}

std::vector<Matrix> upper_basis(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(unit_matrix(n, i, j));
  return out;
}

std::vector<std::string> unit_labels(std::size_t n, bool upper_only, bool diagonal_only) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((upper_only && j < i) || (diagonal_only && j != i)) continue;
      out.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return out;
}

Expectation paper(Expectation::Value v) { return {std::move(v), "paper", ""}; }
Expectation trivial(Expectation::Value v) { return {std::move(v), "trivial", ""}; }
Expectation derived(Expectation::Value v, std::string oracle) { return {std::move(v), "derived", std::move(oracle)}; }

CorpusInstance algebra_instance(std::string name, StructureAlgebra a) {
  CorpusInstance inst;
  inst.name = std::move(name);
  inst.algebra = std::move(a);
  inst.expected["valid"] = trivial(true);
  return inst;
}

// Unit lower times unit upper triangular: always invertible.
Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = static_cast<long>(rng() % 5) - 2;
      upper(j, i) = static_cast<long>(rng() % 5) - 2;
    }
  return lower * upper;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(error_code::kUnknownFamily, "expected a non-negative integer, got '" + s + "'");
  }
  return std::stoul(s);
}

CorpusInstance seeded_triangular(std::size_t na, std::size_t mx, std::size_t nb, std::uint64_t seed) {
  if (na == 0 || nb == 0) throw InputError(error_code::kUnknownFamily, "triangular: nA and nB must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Scalar> left(na * mx * mx);
  std::vector<Scalar> right(mx * nb * mx);
  for (std::size_t s = 0; s < mx; ++s) {
    const std::size_t row = rng() % na;
    const std::size_t col = rng() % nb;
    left[(row * mx + s) * mx + s] = 1;
    right[(s * nb + col) * mx + s] = 1;
  }
  Bimodule x(na, nb, mx, std::move(left), std::move(right));
  if (mx > 1) x = change_basis(x, random_invertible(mx, rng));

  const StructureAlgebra a = diagonal_algebra(na);
  const StructureAlgebra b = diagonal_algebra(nb);
  TriangularBuild build = build_triangular(a, x, b);

  CorpusInstance inst;
  inst.name = "triangular(" + std::to_string(na) + "," + std::to_string(mx) + "," + std::to_string(nb) + ")#" +
              std::to_string(seed);
  inst.algebra = build.ext().base;
  inst.module = build.ext().module;
  inst.idempotent = build.ctx.p;
  inst.triangular = TriangularParts{a, x, b};
  inst.expected["valid"] = trivial(true);
  inst.expected["star"] = trivial(true);
  inst.expected["total.dim"] = trivial(static_cast<std::int64_t>(na + mx + nb));
  return inst;
}

}  // namespace

StructureAlgebra named_algebra(const std::string& name) {
  if (name == "q") return algebra_from_matrices(scalar_basis(), {"1"});
  if (name == "q2") return diagonal_algebra(2);
  if (name == "q3") return diagonal_algebra(3);
  if (name == "dual") return dual_numbers();
  if (name == "m2") return matrix_algebra(2);
  if (name == "t2") return upper_triangular_algebra(2);
  if (name == "t3") return upper_triangular_algebra(3);
  if (name == "m4_5d") {
    return algebra_from_matrices(
        {unit_matrix(4, 0, 0), unit_matrix(4, 1, 1), unit_matrix(4, 1, 2), unit_matrix(4, 2, 2), unit_matrix(4, 3, 3)},
        {"a", "b", "u", "c", "d"});
  }
  throw InputError(error_code::kUnknownFamily, "unknown algebra name '" + name + "'");
}

Bimodule rectangular_bimodule(const std::vector<Matrix>& left_basis, const std::vector<Matrix>& right_basis,
                              std::size_t rows, std::size_t cols) {
  const std::size_t m = rows * cols;
  const std::size_t nl = left_basis.size();
  const std::size_t nr = right_basis.size();
  auto unit = [&](std::size_t s) {
    Matrix e(rows, cols);
    e(s / cols, s % cols) = 1;
    return e;
  };
  auto coords = [&](const Matrix& x) {
    Vector v(m);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) v[r * cols + c] = x(r, c);
    return v;
  };
  std::vector<Scalar> left(nl * m * m);
  std::vector<Scalar> right(m * nr * m);
  for (std::size_t s = 0; s < m; ++s) {
    const Matrix xs = unit(s);
    for (std::size_t i = 0; i < nl; ++i) {
      const Vector v = coords(left_basis[i] * xs);
      for (std::size_t t = 0; t < m; ++t) left[(i * m + s) * m + t] = v[t];
    }
    for (std::size_t i = 0; i < nr; ++i) {
      const Vector v = coords(xs * right_basis[i]);
      for (std::size_t t = 0; t < m; ++t) right[(s * nr + i) * m + t] = v[t];
    }
  }
  return Bimodule(nl, nr, m, std::move(left), std::move(right));
}

CorpusInstance m4_subalgebra_instance() {
  CorpusInstance inst;
  inst.name = "m4_subalgebra_5d";
  inst.algebra = named_algebra("m4_5d");
  // basis order a, b, u, c, d; X = Q acted on through a33 (left) and a22 (right).
  std::vector<Scalar> left(5);
  std::vector<Scalar> right(5);
  left[3] = 1;
  right[1] = 1;
  inst.module = Bimodule(5, 5, 1, std::move(left), std::move(right));
  inst.idempotent = Vector{0, 0, 0, 1, 0};

  inst.expected["valid"] = paper(true);
  inst.expected["star"] = paper(true);
  inst.expected["corner_dim_p"] = paper(std::int64_t{1});
  inst.expected["corner_dim_q"] = paper(std::int64_t{3});
  inst.expected["w_certified_p"] = paper(true);
  inst.expected["w_certified_q"] = paper(true);
  inst.expected["base.ldp"] = paper(true);
  inst.expected["sufficiency_guaranteed"] = paper(true);
  inst.expected["total.ldp"] = paper(true);
  inst.expected["total.pi_x_center_zero"] = paper(true);
  inst.expected["loyal_left"] = derived(true, "{a : aX = 0} is a33 = 0, so pap = a33 E33 = 0");
  inst.expected["loyal_right"] = derived(false, "{a : Xa = 0} is a22 = 0, which leaves qaq = a E11 + d E44 free");
  inst.expected["base.idempotents_found_at_least"] =
      derived(std::int64_t{16}, "one idempotent per 0/1 pattern on a, b, c, d with u solved linearly");
  return inst;
}

CorpusInstance lift_counterexample_instance() {
  CorpusInstance inst;
  inst.name = "lift_counterexample";
  inst.algebra = algebra_from_matrices(
      {unit_matrix(4, 0, 0) + unit_matrix(4, 1, 1) + unit_matrix(4, 2, 2), unit_matrix(4, 3, 3), unit_matrix(4, 0, 1),
       unit_matrix(4, 0, 2), unit_matrix(4, 1, 2)},
      {"a", "d", "E12", "E13", "E23"});
  std::vector<Scalar> left(5);
  std::vector<Scalar> right(5);
  left[1] = 1;
  right[0] = 1;
  inst.module = Bimodule(5, 5, 1, std::move(left), std::move(right));
  inst.idempotent = Vector{0, 1, 0, 0, 0};
  // E12 -> E23, every other basis vector -> 0.
  Matrix map(5, 5);
  map(4, 2) = 1;
  inst.base_map = map;

  inst.expected["valid"] = trivial(true);
  inst.expected["star"] = derived(true, "p x = a44 x with p44 = 1, x q = x (1 - p11) with p11 = 0");
  inst.expected["base.ldp"] = derived(false, "E12 -> E23 is a Lie derivation outside Der + C");
  inst.expected["base_map_proper"] = derived(false, "rank of [Der, C, L] exceeds rank of [Der, C] under fraction-free elimination");
  inst.expected["lifted_map_proper"] = derived(false, "the Der + C part of the lift restricts to Der + C of A");
  inst.expected["total.ldp"] = derived(false, "the lift of E12 -> E23 is a non-proper Lie derivation");
  inst.expected["sufficiency_guaranteed"] = derived(false, "condition I fails with the base algebra");
  return inst;
}

CorpusInstance triangular_instance(std::string name, const std::vector<Matrix>& a_basis,
                                   std::vector<std::string> a_labels, const std::vector<Matrix>& b_basis,
                                   std::vector<std::string> b_labels, std::size_t rows, std::size_t cols) {
  const StructureAlgebra a = algebra_from_matrices(a_basis, std::move(a_labels));
  const StructureAlgebra b = algebra_from_matrices(b_basis, std::move(b_labels));
  const Bimodule x = rectangular_bimodule(a_basis, b_basis, rows, cols);
  TriangularBuild build = build_triangular(a, x, b);
  CorpusInstance inst;
  inst.name = std::move(name);
  inst.algebra = build.ext().base;
  inst.module = build.ext().module;
  inst.idempotent = build.ctx.p;
  inst.triangular = TriangularParts{a, x, b};
  inst.expected["valid"] = trivial(true);
  inst.expected["star"] = paper(true);
  inst.expected["total.t_collapse"] = paper(true);
  inst.expected["total.pi_x_center_zero"] = paper(true);
  inst.expected["corner_dim_p"] = derived(static_cast<std::int64_t>(a.dim()), "p(A ⊕ B)p = A");
  inst.expected["corner_dim_q"] = derived(static_cast<std::int64_t>(b.dim()), "q(A ⊕ B)q = B");
  return inst;
}

std::vector<CorpusInstance> builtin_corpus() {
  std::vector<CorpusInstance> out;
  out.push_back(m4_subalgebra_instance());

  {
    auto t2 = triangular_instance("t2", scalar_basis(), {"1"}, scalar_basis(), {"1"}, 1, 1);
    t2.expected["total.dim_der"] = derived(std::int64_t{2}, "inner derivations: dim A - dim Z = 3 - 1");
    t2.expected["total.dim_lie_der"] = derived(std::int64_t{4}, "dim Der + dim C - dim(Der ∩ C) = 2 + 2 - 0");
    t2.expected["total.dim_central_killing"] = derived(std::int64_t{2}, "(dim A - dim [A,A]) * dim Z = (3 - 1) * 1");
    t2.expected["total.dim_center"] = derived(std::int64_t{1}, "kernel of the 12 x 3 commutator system");
    t2.expected["total.ldp"] = derived(true, "4 == 2 + 2 - 0");
    t2.expected["sufficiency_guaranteed"] = derived(true, "corners commutative and 1-dimensional");
    t2.expected["triangular_guaranteed"] = derived(true, "corners commutative and 1-dimensional");
    t2.expected["loyal"] = derived(true, "X = Q is faithful on both sides");
    out.push_back(std::move(t2));
  }
  {
    auto tri = triangular_instance("tri_m2_m2_m2", full_basis(2), unit_labels(2, false, false), full_basis(2),
                                   unit_labels(2, false, false), 2, 2);
    tri.expected["total.dim"] = trivial(std::int64_t{12});
    tri.expected["triangular_guaranteed"] = derived(true, "M2 has the Lie derivation property and W_M2 = M2");
    tri.expected["sufficiency_guaranteed"] = derived(true, "specialization of the triangular check");
    tri.expected["loyal"] = derived(true, "M2 acts faithfully on 2 x 2 matrices from both sides");
    out.push_back(std::move(tri));
  }
  {
    auto inst = triangular_instance("tri_q_q2_q2", scalar_basis(), {"1"}, diagonal_basis(2),
                                    unit_labels(2, false, true), 1, 2);
    inst.expected["corner_dim_p"] = derived(std::int64_t{1}, "block sizes");
    inst.expected["corner_dim_q"] = derived(std::int64_t{2}, "block sizes");
    out.push_back(std::move(inst));
  }
  {
    auto t3 = triangular_instance("t3", scalar_basis(), {"1"}, upper_basis(2), unit_labels(2, true, false), 1, 2);
    t3.expected["total.dim"] = trivial(std::int64_t{6});
    t3.expected["total.dim_inner"] = derived(std::int64_t{5}, "dim A - dim Z = 6 - 1");
    out.push_back(std::move(t3));
  }
  out.push_back(lift_counterexample_instance());
  {
    auto inst = algebra_instance("dual_numbers", named_algebra("dual"));
    inst.expected["base.ldp"] = trivial(true);
    inst.expected["base.dim_lie_der"] = trivial(std::int64_t{4});
    inst.expected["base.w_certified"] = derived(false, "only idempotents are 0 and 1; no commutators");
    inst.expected["base.central_ideal_free"] = trivial(false);
    out.push_back(std::move(inst));
  }
  {
    auto inst = algebra_instance("q3", named_algebra("q3"));
    inst.expected["base.dim_lie_der"] = trivial(std::int64_t{9});
    inst.expected["base.dim_central_killing"] = trivial(std::int64_t{9});
    inst.expected["base.ldp"] = trivial(true);
    inst.expected["base.idempotent_count"] = derived(std::int64_t{8}, "0/1 vectors under the pointwise product");
    inst.expected["base.idempotents_exhaustive"] = derived(true, "every coordinate is forced into {0, 1}");
    out.push_back(std::move(inst));
  }
  {
    auto inst = algebra_instance("m2", named_algebra("m2"));
    inst.expected["base.dim_der"] = derived(std::int64_t{3}, "inner derivations: 4 - 1, contained in Der");
    inst.expected["base.dim_center"] = trivial(std::int64_t{1});
    inst.expected["base.dim_commutators"] = derived(std::int64_t{3}, "span of the six basis commutators");
    inst.expected["base.dim_central_killing"] = derived(std::int64_t{1}, "(4 - 3) * 1");
    inst.expected["base.ldp"] = derived(true, "3 + 1 - 0 == dim LieDer");
    inst.expected["base.w_certified"] = derived(true, "trace-zero span plus E11 spans M2");
    inst.expected["base.central_ideal_free"] = derived(true, "fixpoint from span{1} drops to 0 in one step");
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CorpusInstance> generate_family(const std::string& descriptor, std::uint64_t seed) {
  static const std::regex pattern(R"(^\s*(\w+)\s*\(([^)]*)\)\s*$)");
  std::smatch match;
  if (!std::regex_match(descriptor, match, pattern)) {
    throw InputError(error_code::kUnknownFamily, "malformed family descriptor '" + descriptor + "'");
  }
  const std::string kind = match[1];
  const auto args = split_args(match[2]);
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError(error_code::kUnknownFamily, kind + " expects " + std::to_string(count) + " arguments");
    }
  };
  const std::string suffix = "#" + std::to_string(seed);

  if (kind == "triangular") {
    need(3);
    return {seeded_triangular(parse_count(args[0]), parse_count(args[1]), parse_count(args[2]), seed)};
  }
  if (kind == "direct_sum") {
    need(2);
    const auto a = named_algebra(args[0]);
    const auto b = named_algebra(args[1]);
    auto inst = algebra_instance("direct_sum(" + args[0] + "," + args[1] + ")" + suffix, direct_sum(a, b));
    inst.expected["base.dim_center"] =
        derived(static_cast<std::int64_t>(center(a).dim() + center(b).dim()), "Z(A ⊕ B) = Z(A) ⊕ Z(B)");
    return {std::move(inst)};
  }
  if (kind == "corner_of") {
    need(1);
    const auto a = named_algebra(args[0]);
    std::vector<Vector> candidates;
    for (const auto& e : find_idempotents(a).found)
      if (e.nontrivial()) candidates.push_back(e.vector());
    if (candidates.empty()) {
      throw InputError(error_code::kTrivialIdempotent, "corner_of: " + args[0] + " has no nontrivial idempotent");
    }
    std::mt19937_64 rng(seed);
    const Vector& p = candidates[rng() % candidates.size()];
    return {algebra_instance("corner_of(" + args[0] + ")" + suffix, corner(a, p).algebra)};
  }
  if (kind == "trivial_extension_of") {
    need(1);
    const auto a = named_algebra(args[0]);
    auto inst = algebra_instance("trivial_extension_of(" + args[0] + ")" + suffix, a);
    inst.module = regular_bimodule(a);
    return {std::move(inst)};
  }
  if (kind == "scalar_extension") {
    need(1);
    static const int kRadicands[] = {2, 3, 5, -1, -3};
    std::mt19937_64 rng(seed);
    const int d = kRadicands[rng() % std::size(kRadicands)];
    auto inst = algebra_instance("scalar_extension(" + args[0] + ",t^2=" + std::to_string(d) + ")" + suffix,
                                 tensor_product(named_algebra(args[0]), quadratic_extension(d)));
    return {std::move(inst)};
  }
  throw InputError(error_code::kUnknownFamily, "unknown family '" + kind + "'");
}

std::optional<StarContext> star_context(const CorpusInstance& inst) {
  if (!inst.module || !inst.idempotent) return std::nullopt;
  auto star = check_star(build_trivial_extension(inst.algebra, *inst.module), *inst.idempotent);
  return star.context;
}

std::optional<TriangularBuild> triangular_build(const CorpusInstance& inst) {
  if (!inst.triangular) return std::nullopt;
  return build_triangular(inst.triangular->a, inst.triangular->x, inst.triangular->b);
}

}  // namespace liederiv
