#include "liederiv/campaign.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "liederiv/algebra_ops.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/properness.hpp"

namespace liederiv {

namespace {

const std::vector<std::string> kSuites = {"validation", "spaces",      "block_conditions", "center",       "witness",
                                          "proof_identity", "sufficiency", "certificates",     "tau",          "expectations"};

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Lazily computed views of one instance, shared by the suites and the fact evaluator.
class InstanceView {
 public:
  explicit InstanceView(const CorpusInstance& inst) : inst_(inst) {}

  const CorpusInstance& instance() const { return inst_; }

  const std::optional<StarContext>& star() {
    if (!star_done_) {
      star_ = star_context(inst_);
      star_done_ = true;
    }
    return star_;
  }

  const std::optional<TrivialExtension>& extension() {
    if (!ext_done_) {
      if (inst_.module) ext_ = build_trivial_extension(inst_.algebra, *inst_.module);
      ext_done_ = true;
    }
    return ext_;
  }

  const std::optional<TriangularBuild>& triangular() {
    if (!tri_done_) {
      tri_ = triangular_build(inst_);
      tri_done_ = true;
    }
    return tri_;
  }

  const PropernessSolver& base_solver() {
    if (!base_) base_ = std::make_unique<PropernessSolver>(inst_.algebra);
    return *base_;
  }

  const PropernessSolver& total_solver() {
    if (!total_) total_ = std::make_unique<PropernessSolver>(extension()->total);
    return *total_;
  }

  const SufficiencyReport& sufficiency() {
    if (!sufficiency_) sufficiency_ = check_sufficiency(*star());
    return *sufficiency_;
  }

 private:
  const CorpusInstance& inst_;
  bool star_done_ = false;
  bool ext_done_ = false;
  bool tri_done_ = false;
  std::optional<StarContext> star_;
  std::optional<TrivialExtension> ext_;
  std::optional<TriangularBuild> tri_;
  std::unique_ptr<PropernessSolver> base_;
  std::unique_ptr<PropernessSolver> total_;
  std::optional<SufficiencyReport> sufficiency_;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::optional<Expectation::Value> algebra_fact(const StructureAlgebra& a, const PropernessSolver& solver,
                                               const std::string& key) {
  if (key == "dim") return as_int(a.dim());
  if (key == "ldp") return solver.has_lie_derivation_property();
  if (key == "dim_der") return as_int(solver.dims().der);
  if (key == "dim_lie_der") return as_int(solver.dims().lie_der);
  if (key == "dim_central_killing") return as_int(solver.dims().central_killing_commutators);
  if (key == "dim_center") return as_int(center(a).dim());
  if (key == "dim_commutators") return as_int(commutator_subspace(a).dim());
  if (key == "dim_inner") return as_int(inner_derivations(a).dim());
  if (key == "w_certified") return w_subalgebra(a).certified;
  if (key == "central_ideal_free") return central_ideal_free(a);
  if (key == "idempotent_count" || key == "idempotents_found_at_least") return as_int(find_idempotents(a).found.size());
  if (key == "idempotents_exhaustive") return find_idempotents(a).search_exhaustive;
  return std::nullopt;
}

bool t_collapse(InstanceView& view) {
  const auto& ext = view.extension();
  for (const auto& v : view.total_solver().lie_derivations().basis_vectors()) {
    const std::size_t n = ext->total.dim();
    if (!decompose_map(*ext, unflatten(v, n, n)).t.is_zero()) return false;
  }
  return true;
}

bool pi_x_center_zero(InstanceView& view) {
  const auto& ext = *view.extension();
  return image(ext.module_projection(), center(ext.total)).is_zero();
}

std::optional<Expectation::Value> evaluate(InstanceView& view, const std::string& key) {
  const auto& inst = view.instance();
  if (key == "valid") {
    bool ok = validate_algebra(inst.algebra).ok();
    if (ok && inst.module) ok = validate_bimodule(inst.algebra, *inst.module).ok();
    return ok;
  }
  if (key.rfind("base.", 0) == 0) return algebra_fact(inst.algebra, view.base_solver(), key.substr(5));
  if (key.rfind("total.", 0) == 0) {
    if (!view.extension()) return std::nullopt;
    const std::string sub_key = key.substr(6);
    if (sub_key == "t_collapse") return t_collapse(view);
    if (sub_key == "pi_x_center_zero") return pi_x_center_zero(view);
    return algebra_fact(view.extension()->total, view.total_solver(), sub_key);
  }
  if (key == "star") return inst.module && inst.idempotent && view.star().has_value();
  if (key == "base_map_proper") {
    if (!inst.base_map) return std::nullopt;
    return view.base_solver().is_proper(*inst.base_map).proper;
  }

  if (!view.star()) return std::nullopt;
  const StarContext& ctx = *view.star();
  if (key == "corner_dim_p") return as_int(corner(inst.algebra, ctx.p).algebra.dim());
  if (key == "corner_dim_q") return as_int(corner(inst.algebra, ctx.q()).algebra.dim());
  if (key == "w_certified_p") return w_subalgebra(corner(inst.algebra, ctx.p).algebra).certified;
  if (key == "w_certified_q") return w_subalgebra(corner(inst.algebra, ctx.q()).algebra).certified;
  if (key == "sufficiency_guaranteed") return view.sufficiency().guaranteed();
  if (key == "loyal") return loyalty(ctx).loyal();
  if (key == "loyal_left") return loyalty(ctx).left;
  if (key == "loyal_right") return loyalty(ctx).right;
  if (key == "triangular_guaranteed") {
    if (!view.triangular()) return std::nullopt;
    return check_triangular_sufficiency(*view.triangular()).guaranteed();
  }
  if (key == "lifted_map_proper") {
    if (!inst.base_map) return std::nullopt;
    return view.total_solver().is_proper(lift_base_map(ctx.ext, *inst.base_map)).proper;
  }
  return std::nullopt;
}

class SuiteRunner {
 public:
  SuiteRunner(const CorpusInstance& inst, std::uint64_t seed) : view_(inst), seed_(seed) {}

  std::vector<CampaignEntry> run(const std::vector<std::string>& suites) {
    bool valid = true;
    for (const auto& suite : suites) {
      suite_ = suite;
      if (suite != "validation" && !valid) {
        add("all", "skip", "validation failed");
        continue;
      }
      try {
        if (suite == "validation") valid = validation();
        else if (suite == "spaces") spaces();
        else if (suite == "block_conditions") block_conditions();
        else if (suite == "center") center_suite();
        else if (suite == "witness") witness();
        else if (suite == "proof_identity") proof_identity();
        else if (suite == "sufficiency") sufficiency();
        else if (suite == "certificates") certificates();
        else if (suite == "tau") tau();
        else if (suite == "expectations") expectations();
      } catch (const std::exception& e) {
        add("exception", "fail", e.what());
        if (suite == "validation") valid = false;
      }
    }
    return std::move(entries_);
  }

 private:
  void add(std::string invariant, std::string status, std::string details = "") {
    entries_.push_back({view_.instance().name, suite_, std::move(invariant), std::move(status), std::move(details)});
  }

  void check(std::string invariant, bool ok, std::string details = "") {
    add(std::move(invariant), ok ? "pass" : "fail", std::move(details));
  }

  bool needs_star(const std::string& invariant) {
    if (view_.star()) return true;
    add(invariant, "skip", "no star context");
    return false;
  }

  static std::string report_details(const ValidationReport& r) {
    if (r.ok()) return "";
    const auto& v = r.violations.front();
    std::ostringstream out;
    out << r.violations.size() << " violations, first " << v.identity << " at";
    for (auto i : v.indices) out << ' ' << i;
    return out.str();
  }

  bool validation() {
    const auto& inst = view_.instance();
    const auto alg = validate_algebra(inst.algebra);
    check("algebra_axioms", alg.ok(), report_details(alg));
    bool ok = alg.ok();
    if (inst.module) {
      const auto mod = validate_bimodule(inst.algebra, *inst.module);
      check("bimodule_axioms", mod.ok(), report_details(mod));
      ok = ok && mod.ok();
    }
    if (ok && inst.idempotent) {
      const bool idem = is_idempotent(inst.algebra, *inst.idempotent);
      check("idempotent", idem);
      ok = idem;
      if (ok && inst.module) {
        const auto star = check_star(*view_.extension(), *inst.idempotent);
        check("star", star.holds(),
              star.violating_index ? "p x q != x at module basis vector " + std::to_string(*star.violating_index) : "");
        ok = star.holds();
      }
    }
    if (ok && view_.triangular()) {
      check("triangular_star", true);
    }
    return ok;
  }

  void algebra_spaces(const std::string& tag, const StructureAlgebra& a, const PropernessSolver& solver) {
    const auto& d = solver.dims();
    const std::size_t expected_c = (a.dim() - commutator_subspace(a).dim()) * center(a).dim();
    check(tag + ".dim_c_formula", d.central_killing_commutators == expected_c,
          std::to_string(d.central_killing_commutators) + " vs " + std::to_string(expected_c));
    check(tag + ".intersection_formula", d.intersection + d.sum == d.der + d.central_killing_commutators);
    check(tag + ".lie_pairs_reduced_eq_full",
          lie_derivation_space(a, PairRange::kReduced) == lie_derivation_space(a, PairRange::kFull));
    check(tag + ".inner_in_der", solver.derivations().contains(inner_derivations(a)));
    check(tag + ".der_plus_c_in_lie", solver.lie_derivations().contains(solver.sum()));
  }

  void spaces() {
    algebra_spaces("base", view_.instance().algebra, view_.base_solver());
    if (view_.extension()) algebra_spaces("total", view_.extension()->total, view_.total_solver());
  }

  void block_conditions() {
    if (!needs_star("block_conditions")) return;
    const auto& ext = view_.star()->ext;
    const std::size_t n = ext.total.dim();
    check("lie_block_conditions",
          solution_space(lie_block_conditions(ext), n * n) == view_.total_solver().lie_derivations());
    check("derivation_block_conditions",
          solution_space(derivation_block_conditions(ext), n * n) == view_.total_solver().derivations());
    const auto simp = check_simplifications(*view_.star());
    check("simplifications", simp.ok(), report_details(simp));
    if (view_.triangular()) check("t_collapse", t_collapse(view_));
  }

  void center_suite() {
    if (!needs_star("center_formula")) return;
    check("center_formula", center_via_formula(*view_.star()) == center(view_.extension()->total));
    check("pi_x_center_zero", pi_x_center_zero(view_));
  }

  std::vector<Matrix> lie_basis_maps() {
    const std::size_t n = view_.extension()->total.dim();
    std::vector<Matrix> out;
    for (const auto& v : view_.total_solver().lie_derivations().basis_vectors()) out.push_back(unflatten(v, n, n));
    if (view_.instance().base_map) out.push_back(lift_base_map(view_.star()->ext, *view_.instance().base_map));
    return out;
  }

  void witness() {
    if (!needs_star("equivalence")) return;
    std::size_t agree = 0;
    std::size_t proper = 0;
    const auto maps = lie_basis_maps();
    for (const auto& m : maps) {
      const bool witness = find_base_witness(*view_.star(), m).ell_a.has_value();
      const bool is_prop = view_.total_solver().is_proper(m).proper;
      agree += witness == is_prop;
      proper += is_prop;
    }
    check("equivalence", agree == maps.size(),
          std::to_string(agree) + "/" + std::to_string(maps.size()) + " agree, " + std::to_string(proper) + " proper");
  }

  void proof_identity() {
    if (!needs_star("witness_identity")) return;
    const StarContext& ctx = *view_.star();
    const auto& ext = ctx.ext;
    const auto& a = ext.base;
    const std::size_t n = a.dim();
    const std::size_t m = ext.module_dim();
    std::size_t witnesses = 0;
    bool ok = true;
    for (const auto& map : lie_basis_maps()) {
      const auto found = find_base_witness(ctx, map);
      if (!found.ell_a) continue;
      ++witnesses;
      const Matrix& ell = *found.ell_a;
      auto bracket_ax = [&](const Vector& z, const Vector& x) {
        return ext.total.bracket(ext.embed_algebra(z), ext.embed_module(x));
      };
      auto corner_p = [&](const Vector& v) { return a.multiply(a.multiply(ctx.p, v), ctx.p); };
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Vector pap = corner_p(a.basis(i));
        for (std::size_t j = 0; j < n && ok; ++j) {
          const Vector pbp = corner_p(a.basis(j));
          const Vector lhs_arg = ell * a.multiply(pap, pbp);
          for (std::size_t k = 0; k < m && ok; ++k) {
            const Vector x = unit_vector(m, k);
            const Vector lhs = bracket_ax(lhs_arg, x);
            const Vector rhs = liederiv::add(bracket_ax(ell * pap, ext.module.act_left(a.basis(j), x)),
                                   bracket_ax(ell * pbp, ext.module.act_left(a.basis(i), x)));
            ok = lhs == rhs;
          }
        }
      }
    }
    check("witness_identity", ok, std::to_string(witnesses) + " witnesses");
  }

  void sufficiency() {
    if (!needs_star("soundness")) return;
    const auto& rep = view_.sufficiency();
    const bool ldp = view_.total_solver().has_lie_derivation_property();
    check("soundness", !rep.guaranteed() || ldp,
          std::string(rep.guaranteed() ? "guaranteed" : "not-concluded") + ", total ldp " + (ldp ? "true" : "false"));
    if (view_.triangular()) {
      const auto cor = check_triangular_sufficiency(*view_.triangular());
      check("triangular_agreement", cor.guaranteed() == rep.guaranteed());
    }
  }

  void algebra_certificates(const std::string& tag, const StructureAlgebra& a, const PropernessSolver& solver,
                            std::mt19937_64& rng) {
    const std::size_t n = a.dim();
    bool basis_ok = true;
    for (const auto& v : solver.lie_derivations().basis_vectors()) {
      const Matrix map = unflatten(v, n, n);
      basis_ok = basis_ok && validate_certificate(a, map, solver.is_proper(map));
    }
    check(tag + ".lie_basis_certificates", basis_ok);

    const auto der = solver.derivations().basis_vectors();
    const auto cen = solver.central().basis_vectors();
    bool random_ok = true;
    for (int trial = 0; trial < 5 && random_ok; ++trial) {
      Vector v = zero_vector(n * n);
      for (const auto& b : der) v = liederiv::add(v, scale(Scalar(static_cast<long>(rng() % 5) - 2), b));
      for (const auto& b : cen) v = liederiv::add(v, scale(Scalar(static_cast<long>(rng() % 5) - 2), b));
      const Matrix map = unflatten(v, n, n);
      const auto cert = solver.is_proper(map);
      random_ok = cert.proper && validate_certificate(a, map, cert);
    }
    check(tag + ".random_der_plus_c", random_ok);
  }

  void certificates() {
    std::mt19937_64 rng(seed_ ^ name_hash(view_.instance().name));
    algebra_certificates("base", view_.instance().algebra, view_.base_solver(), rng);
    if (view_.extension()) algebra_certificates("total", view_.extension()->total, view_.total_solver(), rng);
  }

  void tau() {
    if (!needs_star("isomorphism")) return;
    const auto loyal = loyalty(*view_.star());
    if (view_.triangular()) {
      const auto& build = *view_.triangular();
      const bool faithful_left = kernel_of_actions(build.x, true, build.a.dim()).is_zero();
      const bool faithful_right = kernel_of_actions(build.x, false, build.b.dim()).is_zero();
      check("loyal_eq_faithful", loyal.left == faithful_left && loyal.right == faithful_right);
    }
    if (!loyal.loyal()) {
      add("isomorphism", "skip", "not loyal");
      return;
    }
    const auto t = tau_isomorphism(*view_.star());
    check("isomorphism", t.tau && t.bijective && t.multiplicative, t.diagnostics);
  }

  // {a : a X = 0} (left) or {b : X b = 0} (right) for a module over the factor algebras.
  static Subspace kernel_of_actions(const Bimodule& x, bool left, std::size_t dim) {
    const std::size_t m = x.dim();
    Matrix stacked(m * m, dim);
    for (std::size_t s = 0; s < m; ++s) {
      const Vector xs = unit_vector(m, s);
      const Matrix orbit = left ? x.left_orbit(xs) : x.right_orbit(xs);
      stacked.set_block(s * m, 0, orbit);
    }
    return kernel_basis(stacked);
  }

  void expectations() {
    for (const auto& [key, exp] : view_.instance().expected) {
      const auto actual = evaluate(view_, key);
      if (!actual) {
        add(key, "fail", "fact not applicable");
        continue;
      }
      check(key, fact_matches(key, exp.value, *actual),
            "expected " + format_fact(exp.value) + " (" + exp.provenance + "), got " + format_fact(*actual));
    }
  }

  InstanceView view_;
  std::uint64_t seed_;
  std::string suite_;
  std::vector<CampaignEntry> entries_;
};

}  // namespace

bool CampaignReport::success() const noexcept { return count("fail") == 0; }

std::size_t CampaignReport::count(const std::string& status) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const CampaignEntry& e) { return e.status == status; }));
}

const std::vector<std::string>& campaign_suites() { return kSuites; }

CampaignReport run_campaign(const std::vector<CorpusInstance>& instances, const std::vector<std::string>& suites,
                            std::uint64_t seed) {
  std::vector<std::string> selected;
  if (suites.empty()) {
    selected = kSuites;
  } else {
    for (const auto& s : suites)
      if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
        throw InputError(error_code::kUsage, "unknown suite '" + s + "'");
    // Keep the canonical order so validation always runs first.
    for (const auto& s : kSuites)
      if (std::find(suites.begin(), suites.end(), s) != suites.end()) selected.push_back(s);
  }

  std::vector<std::vector<CampaignEntry>> per_instance(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    per_instance[i] = SuiteRunner(instances[i], seed).run(selected);
  }

  CampaignReport report;
  for (auto& part : per_instance)
    for (auto& e : part) report.entries.push_back(std::move(e));
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const CampaignEntry& a, const CampaignEntry& b) {
    return a.instance < b.instance;
  });
  return report;
}

std::optional<Expectation::Value> evaluate_fact(const CorpusInstance& inst, const std::string& key) {
  InstanceView view(inst);
  return evaluate(view, key);
}

bool fact_matches(const std::string& key, const Expectation::Value& expected, const Expectation::Value& actual) {
  const bool at_least = key.size() >= 9 && key.compare(key.size() - 9, 9, "_at_least") == 0;
  if (at_least && std::holds_alternative<std::int64_t>(expected) && std::holds_alternative<std::int64_t>(actual)) {
    return std::get<std::int64_t>(actual) >= std::get<std::int64_t>(expected);
  }
  return expected == actual;
}

std::string format_fact(const Expectation::Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

}  // namespace liederiv
