#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "liederiv/algebra_ops.hpp"
#include "liederiv/campaign.hpp"
#include "liederiv/corpus.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/io.hpp"
#include "liederiv/properness.hpp"
#include "liederiv/trivial_extension.hpp"

using namespace liederiv;
using io::Json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kExpectMismatch = 3, kInternal = 4 };

struct Options {
  std::string algebra;
  std::string module;
  std::string p;
  std::string map;
  std::string out;
  std::string expect;
  std::string family;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultIdempotentBudget;
  std::vector<std::string> suites;
};

struct Result {
  Json doc;
  bool verdict = true;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(error_code::kUsage, std::string("missing required flag ") + flag);
}

StructureAlgebra load_algebra(const Options& o) {
  require(o.algebra, "--algebra");
  auto a = io::algebra_from_json(io::read_json_file(o.algebra));
  spdlog::debug("loaded algebra of dimension {} from {}", a.dim(), o.algebra);
  return a;
}

Bimodule load_module(const Options& o) {
  require(o.module, "--module");
  auto x = io::bimodule_from_json(io::read_json_file(o.module));
  spdlog::debug("loaded module of dimension {} from {}", x.dim(), o.module);
  return x;
}

Matrix load_map(const Options& o) {
  require(o.map, "--map");
  return io::matrix_from_json(io::read_json_file(o.map));
}

StarContext load_star(const Options& o) {
  require(o.p, "--p");
  const auto ext = build_trivial_extension(load_algebra(o), load_module(o));
  const Vector p = io::element_from_json(io::read_json_file(o.p));
  if (p.size() != ext.base_dim()) throw InputError(error_code::kDimensionMismatch, "p has the wrong length");
  auto star = check_star(ext, p);
  if (!star.holds()) {
    throw InputError(error_code::kStarViolated,
                     "p x q != x for module basis vector " + std::to_string(*star.violating_index));
  }
  return *star.context;
}

TriangularBuild load_triangular(const Options& o) {
  require(o.algebra, "--algebra");
  const auto parts = io::triangular_from_json(io::read_json_file(o.algebra));
  return build_triangular(parts.a, parts.x, parts.b);
}

std::vector<CorpusInstance> load_instances(const Options& o) {
  if (o.family.empty()) return builtin_corpus();
  return generate_family(o.family, o.seed);
}

Result verb_validate(const Options& o) {
  const auto a = load_algebra(o);
  const auto alg = validate_algebra(a);
  Json doc = {{"format", io::kFormat}, {"algebra", io::validation_to_json(alg)}};
  bool ok = alg.ok();
  if (!o.module.empty()) {
    const auto mod = validate_bimodule(a, load_module(o));
    doc["module"] = io::validation_to_json(mod);
    ok = ok && mod.ok();
  }
  if (!o.p.empty()) {
    const Vector p = io::element_from_json(io::read_json_file(o.p));
    if (p.size() != a.dim()) throw InputError(error_code::kDimensionMismatch, "p has the wrong length");
    const bool idem = alg.ok() && is_idempotent(a, p);
    doc["idempotent"] = idem;
    ok = ok && idem;
  }
  doc["verdict"] = ok;
  return {doc, ok};
}

Result verb_center(const Options& o) {
  const auto a = load_algebra(o);
  return {{{"format", io::kFormat},
           {"center", io::subspace_to_json(center(a))},
           {"commutators", io::subspace_to_json(commutator_subspace(a))}},
          true};
}

Result verb_space(const Options& o, bool lie) {
  const auto a = load_algebra(o);
  const auto space = lie ? lie_derivation_space(a) : derivation_space(a);
  Json doc = io::map_space_to_json(space, a.dim());
  if (!lie) doc["inner_dim"] = inner_derivations(a).dim();
  return {doc, true};
}

Result verb_proper(const Options& o) {
  const auto a = load_algebra(o);
  const auto map = load_map(o);
  if (map.rows() != a.dim() || map.cols() != a.dim()) {
    throw InputError(error_code::kDimensionMismatch, "map must be dim x dim");
  }
  const auto cert = PropernessSolver(a).is_proper(map);
  if (!validate_certificate(a, map, cert)) throw InternalError("certificate failed re-validation");
  return {io::certificate_to_json(cert), cert.proper};
}

Result verb_ldp(const Options& o) {
  const auto res = has_lie_derivation_property(load_algebra(o));
  return {{{"format", io::kFormat}, {"verdict", res.holds}, {"dims", io::dims_to_json(res.dims)}}, res.holds};
}

Result verb_star(const Options& o) {
  require(o.p, "--p");
  const auto ext = build_trivial_extension(load_algebra(o), load_module(o));
  const Vector p = io::element_from_json(io::read_json_file(o.p));
  if (p.size() != ext.base_dim()) throw InputError(error_code::kDimensionMismatch, "p has the wrong length");
  const auto star = check_star(ext, p);
  Json doc = {{"format", io::kFormat}, {"holds", star.holds()}};
  doc["violating_index"] = star.violating_index ? Json(*star.violating_index) : Json(nullptr);
  if (star.holds()) {
    doc["simplifications"] = io::validation_to_json(check_simplifications(*star.context));
    doc["center"] = io::subspace_to_json(center_via_formula(*star.context));
    const auto loyal = loyalty(*star.context);
    doc["loyalty"] = {{"left", loyal.left}, {"right", loyal.right}};
  }
  return {doc, star.holds()};
}

Result verb_thm22(const Options& o) {
  const auto ctx = load_star(o);
  const auto map = load_map(o);
  const auto n = ctx.ext.total.dim();
  if (map.rows() != n || map.cols() != n) throw InputError(error_code::kDimensionMismatch, "map must act on A ⋉ X");
  const auto res = find_base_witness(ctx, map);
  const bool proper = PropernessSolver(ctx.ext.total).is_proper(map).proper;
  if (res.ell_a.has_value() != proper) throw InternalError("base witness and properness disagree");
  return {io::base_witness_to_json(res, proper), res.ell_a.has_value()};
}

Result verb_thm24(const Options& o) {
  const auto rep = check_sufficiency(load_star(o), {}, o.budget);
  return {io::sufficiency_to_json(rep, "2.4"), rep.guaranteed()};
}

Result verb_corollary31(const Options& o) {
  const auto build = load_triangular(o);
  const auto rep = check_triangular_sufficiency(build, o.budget);
  const auto general = check_sufficiency(build.ctx, {}, o.budget);
  Json doc = io::sufficiency_to_json(rep, "3.1");
  doc["agrees_with_2.4"] = rep.guaranteed() == general.guaranteed();
  return {doc, rep.guaranteed()};
}

Result verb_triangular(const Options& o) {
  const auto build = load_triangular(o);
  return {{{"format", io::kFormat},
           {"extension", io::extension_to_json(build.ext())},
           {"total", io::algebra_to_json(build.ext().total)},
           {"p", io::vector_to_json(build.ctx.p)}},
          true};
}

Result verb_extend(const Options& o) {
  const auto ext = build_trivial_extension(load_algebra(o), load_module(o));
  return {{{"format", io::kFormat}, {"extension", io::extension_to_json(ext)}, {"total", io::algebra_to_json(ext.total)}},
          true};
}

Result verb_corpus(const Options& o) {
  Json list = Json::array();
  for (const auto& inst : load_instances(o)) list.push_back(io::instance_to_json(inst));
  return {{{"format", io::kFormat}, {"instances", std::move(list)}}, true};
}

Result verb_campaign(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_campaign(load_instances(o), o.suites, o.seed);
  spdlog::info("campaign: {} entries in {} ms", report.entries.size(),
               std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return {io::campaign_to_json(report), report.success()};
}

// Keys of the expectation file are JSON pointers into the output document.
std::vector<std::string> expectation_mismatches(const Json& doc, const Json& expected) {
  if (!expected.is_object()) throw InputError(error_code::kMalformedJson, "--expect must be a JSON object");
  std::vector<std::string> out;
  for (const auto& [key, value] : expected.items()) {
    Json::json_pointer ptr;
    try {
      ptr = Json::json_pointer(key);
    } catch (const Json::exception&) {
      throw InputError(error_code::kMalformedJson, "bad JSON pointer '" + key + "'");
    }
    if (!doc.contains(ptr)) {
      out.push_back(key + ": missing");
    } else if (doc.at(ptr) != value) {
      out.push_back(key + ": expected " + value.dump() + ", got " + doc.at(ptr).dump());
    }
  }
  return out;
}

void emit(const Options& o, const Json& doc) {
  if (o.out.empty()) {
    std::cout << io::dump(doc);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError(error_code::kUsage, "cannot write '" + o.out + "'");
  f << io::dump(doc);
}

Json error_doc(const std::string& code, const std::string& message) {
  return {{"format", io::kFormat}, {"error", {{"code", code}, {"message", message}}}};
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("liederiv");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LIEDERIV_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  Options o;
  CLI::App app{"Lie derivations of trivial extension algebras over Q"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the JSON result here instead of stdout");
    sub->add_option("--expect", o.expect, "JSON object of {pointer: value}; exit 3 on mismatch");
  };
  auto verb = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    return sub;
  };

  auto* validate = verb("validate", "check algebra and bimodule axioms");
  validate->add_option("--algebra", o.algebra)->required();
  validate->add_option("--module", o.module);
  validate->add_option("--p", o.p);
  auto* center_cmd = verb("center", "center and commutator subspace");
  center_cmd->add_option("--algebra", o.algebra)->required();
  auto* der = verb("derivations", "basis of the derivation space");
  der->add_option("--algebra", o.algebra)->required();
  auto* lie = verb("lie-derivations", "basis of the Lie derivation space");
  lie->add_option("--algebra", o.algebra)->required();
  auto* proper = verb("proper", "decide whether a Lie derivation is proper");
  proper->add_option("--algebra", o.algebra)->required();
  proper->add_option("--map", o.map)->required();
  auto* ldp = verb("ldp", "Lie derivation property of an algebra");
  ldp->add_option("--algebra", o.algebra)->required();
  auto* star = verb("star", "check p x q = x for a module and idempotent");
  star->add_option("--algebra", o.algebra)->required();
  star->add_option("--module", o.module)->required();
  star->add_option("--p", o.p)->required();
  auto* thm22 = verb("thm22", "search the base witness for a Lie derivation of A ⋉ X");
  thm22->add_option("--algebra", o.algebra)->required();
  thm22->add_option("--module", o.module)->required();
  thm22->add_option("--p", o.p)->required();
  thm22->add_option("--map", o.map)->required();
  auto* thm24 = verb("thm24", "sufficient conditions for the Lie derivation property of A ⋉ X");
  thm24->add_option("--algebra", o.algebra)->required();
  thm24->add_option("--module", o.module)->required();
  thm24->add_option("--p", o.p)->required();
  thm24->add_option("--budget", o.budget, "idempotent search budget");
  auto* cor31 = verb("corollary31", "sufficient conditions for a triangular algebra {A, X, B}");
  cor31->add_option("--algebra", o.algebra, "triangular input {A, X, B}")->required();
  cor31->add_option("--budget", o.budget, "idempotent search budget");
  auto* tri = verb("triangular", "build (A ⊕ B) ⋉ X from {A, X, B}");
  tri->add_option("--algebra", o.algebra, "triangular input {A, X, B}")->required();
  auto* extend = verb("extend", "build A ⋉ X");
  extend->add_option("--algebra", o.algebra)->required();
  extend->add_option("--module", o.module)->required();
  auto* corpus = verb("corpus", "emit built-in or generated instances");
  corpus->add_option("--family", o.family, "family descriptor, e.g. triangular(1,2,1)");
  corpus->add_option("--seed", o.seed);
  auto* campaign = verb("campaign", "run invariant suites over instances");
  campaign->add_option("--family", o.family, "family descriptor; built-in corpus when absent");
  campaign->add_option("--seed", o.seed);
  campaign->add_option("--suite", o.suites, "suite to run (repeatable); all when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << io::dump(error_doc(error_code::kUsage, e.what()));
    return kInput;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    spdlog::debug("verb {}", name);
    Result r;
    if (name == "validate") r = verb_validate(o);
    else if (name == "center") r = verb_center(o);
    else if (name == "derivations") r = verb_space(o, false);
    else if (name == "lie-derivations") r = verb_space(o, true);
    else if (name == "proper") r = verb_proper(o);
    else if (name == "ldp") r = verb_ldp(o);
    else if (name == "star") r = verb_star(o);
    else if (name == "thm22") r = verb_thm22(o);
    else if (name == "thm24") r = verb_thm24(o);
    else if (name == "corollary31") r = verb_corollary31(o);
    else if (name == "triangular") r = verb_triangular(o);
    else if (name == "extend") r = verb_extend(o);
    else if (name == "corpus") r = verb_corpus(o);
    else if (name == "campaign") r = verb_campaign(o);

    std::vector<std::string> mismatches;
    if (!o.expect.empty()) mismatches = expectation_mismatches(r.doc, io::read_json_file(o.expect));
    emit(o, r.doc);
    if (!mismatches.empty()) {
      for (const auto& m : mismatches) spdlog::error("expectation mismatch: {}", m);
      return kExpectMismatch;
    }
    return r.verdict ? kOk : kFalse;
  } catch (const InputError& e) {
    std::cout << io::dump(error_doc(e.code(), e.what()));
    return kInput;
  } catch (const InternalError& e) {
    std::cout << io::dump(error_doc("internal", e.what()));
    return kInternal;
  }
}
