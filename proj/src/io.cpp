#include "liederiv/io.hpp"

#include <fstream>
#include <sstream>

#include "liederiv/errors.hpp"

namespace liederiv::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InputError(error_code::kMalformedJson, what); }

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

void require_array(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array");
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

// Nested c[a][b][k] with extents (d0, d1, d2) into a flat vector.
std::vector<Scalar> tensor_from_json(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2,
                                     const std::string& what) {
  require_array(j, what);
  if (j.size() != d0) throw InputError(error_code::kDimensionMismatch, what + ": wrong outer extent");
  std::vector<Scalar> out;
  out.reserve(d0 * d1 * d2);
  for (const auto& a : j) {
    require_array(a, what);
    if (a.size() != d1) throw InputError(error_code::kDimensionMismatch, what + ": wrong middle extent");
    for (const auto& b : a) {
      const Vector v = vector_from_json(b);
      if (v.size() != d2) throw InputError(error_code::kDimensionMismatch, what + ": wrong inner extent");
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

Json tensor_to_json(const std::vector<Scalar>& t, std::size_t d0, std::size_t d1, std::size_t d2) {
  Json out = Json::array();
  for (std::size_t a = 0; a < d0; ++a) {
    Json mid = Json::array();
    for (std::size_t b = 0; b < d1; ++b) {
      Json inner = Json::array();
      for (std::size_t k = 0; k < d2; ++k) inner.push_back(scalar_to_json(t[(a * d1 + b) * d2 + k]));
      mid.push_back(std::move(inner));
    }
    out.push_back(std::move(mid));
  }
  return out;
}

Json with_format(Json j) {
  j["format"] = kFormat;
  return j;
}

Json value_to_json(const Expectation::Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<std::string>(v);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json scalar_to_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError(error_code::kBadScalar, "scalars must be \"p/q\" strings or integers, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Json& j) {
  require_array(j, "vector");
  Vector v;
  v.reserve(j.size());
  for (const auto& s : j) v.push_back(scalar_from_json(s));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(vector_to_json(m.row_vector(r)));
  return with_format({{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}});
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& entries = j.is_array() ? j : field(j, "entries");
    require_array(entries, "matrix entries");
    std::size_t rows = entries.size();
    std::size_t cols = entries.empty() ? 0 : entries.front().size();
    if (j.is_object()) {
      rows = as_size(field(j, "rows"), "rows");
      cols = as_size(field(j, "cols"), "cols");
      if (entries.size() != rows) throw InputError(error_code::kDimensionMismatch, "matrix: row count disagrees");
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Vector row = vector_from_json(entries[r]);
      if (row.size() != cols) throw InputError(error_code::kDimensionMismatch, "matrix: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  });
}

Json algebra_to_json(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  return with_format({{"dim", n},
                      {"labels", a.labels()},
                      {"unit", vector_to_json(a.unit())},
                      {"mul", tensor_to_json(a.tensor(), n, n, n)}});
}

StructureAlgebra algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    const std::size_t n = as_size(field(j, "dim"), "dim");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    }
    if (labels.size() != n) throw InputError(error_code::kDimensionMismatch, "algebra: label count != dim");
    Vector unit = vector_from_json(field(j, "unit"));
    if (unit.size() != n) throw InputError(error_code::kDimensionMismatch, "algebra: unit length != dim");
    auto mul = tensor_from_json(field(j, "mul"), n, n, n, "algebra mul");
    return StructureAlgebra(std::move(labels), std::move(mul), std::move(unit));
  });
}

Json bimodule_to_json(const Bimodule& x) {
  return with_format({{"dim", x.dim()},
                      {"left_dim", x.left_dim()},
                      {"right_dim", x.right_dim()},
                      {"left", tensor_to_json(x.left_tensor(), x.left_dim(), x.dim(), x.dim())},
                      {"right", tensor_to_json(x.right_tensor(), x.dim(), x.right_dim(), x.dim())}});
}

Bimodule bimodule_from_json(const Json& j) {
  return guarded("bimodule", [&] {
    const std::size_t m = as_size(field(j, "dim"), "dim");
    const Json& left = field(j, "left");
    const Json& right = field(j, "right");
    require_array(left, "left");
    require_array(right, "right");
    const std::size_t left_dim = j.contains("left_dim") ? as_size(j.at("left_dim"), "left_dim") : left.size();
    std::size_t right_dim = 0;
    if (j.contains("right_dim")) {
      right_dim = as_size(j.at("right_dim"), "right_dim");
    } else if (!right.empty()) {
      right_dim = right.front().size();
    } else {
      right_dim = left_dim;
    }
    auto l = tensor_from_json(left, left_dim, m, m, "bimodule left");
    auto r = tensor_from_json(right, m, right_dim, m, "bimodule right");
    return Bimodule(left_dim, right_dim, m, std::move(l), std::move(r));
  });
}

Vector element_from_json(const Json& j) {
  return guarded("element", [&] { return vector_from_json(j.is_array() ? j : field(j, "vector")); });
}

TriangularParts triangular_from_json(const Json& j) {
  return guarded("triangular", [&] {
    return TriangularParts{algebra_from_json(field(j, "A")), bimodule_from_json(field(j, "X")),
                           algebra_from_json(field(j, "B"))};
  });
}

Json triangular_to_json(const TriangularParts& t) {
  return with_format({{"A", algebra_to_json(t.a)}, {"X", bimodule_to_json(t.x)}, {"B", algebra_to_json(t.b)}});
}

Json extension_to_json(const TrivialExtension& ext) {
  return with_format({{"A", algebra_to_json(ext.base)}, {"X", bimodule_to_json(ext.module)}});
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(vector_to_json(v));
  return with_format({{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}});
}

Json map_space_to_json(const Subspace& s, std::size_t n) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(matrix_to_json(unflatten(v, n, n)));
  return with_format({{"map_dim", n}, {"dim", s.dim()}, {"basis", std::move(basis)}});
}

Json dims_to_json(const SpaceDims& d) {
  return {{"lie_der", d.lie_der},
          {"der", d.der},
          {"central_killing_commutators", d.central_killing_commutators},
          {"sum", d.sum},
          {"intersection", d.intersection}};
}

Json certificate_to_json(const PropernessCertificate& c) {
  Json out = with_format({{"verdict", c.proper ? "proper" : "not-proper"}, {"dims", dims_to_json(c.dims)}});
  out["witness_d"] = c.witness_d ? matrix_to_json(*c.witness_d) : Json(nullptr);
  out["witness_ell"] = c.witness_ell ? matrix_to_json(*c.witness_ell) : Json(nullptr);
  return out;
}

Json validation_to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"identity", v.identity}, {"indices", v.indices}});
  return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

Json base_witness_to_json(const BaseWitnessResult& r, bool proper) {
  Json out = with_format({{"verdict", r.ell_a.has_value()},
                          {"satisfied", r.satisfied},
                          {"failed", r.failed},
                          {"is_proper", proper},
                          {"agrees", r.ell_a.has_value() == proper}});
  out["witness_ell_a"] = r.ell_a ? matrix_to_json(*r.ell_a) : Json(nullptr);
  return out;
}

Json sufficiency_to_json(const SufficiencyReport& r, const std::string& label) {
  Json ldp = Json::object();
  for (const auto& [name, res] : r.ldp_checks) ldp[name] = {{"holds", res.holds}, {"dims", dims_to_json(res.dims)}};
  auto corner_json = [](const CornerCondition& c) {
    return Json{{"status", c.status()},
                {"holds", c.holds()},
                {"w_certified", c.w_certified},
                {"center_match", c.center_match},
                {"corner_dim", c.corner_dim}};
  };
  Json conditions = {{label + "(I)", {{"holds", r.condition_i}, {"ldp", std::move(ldp)}}},
                     {label + "(II)(i)", corner_json(r.condition_ii_i)},
                     {label + "(II)(ii)", corner_json(r.condition_ii_ii)}};
  return with_format(
      {{"conclusion", r.guaranteed() ? "guaranteed" : "not-concluded"}, {"conditions", std::move(conditions)}});
}

Json tau_to_json(const TauResult& t) {
  Json out = with_format({{"exists", t.tau.has_value()},
                          {"bijective", t.bijective},
                          {"multiplicative", t.multiplicative},
                          {"unital", t.unital},
                          {"p_projection", subspace_to_json(t.p_projection)},
                          {"q_projection", subspace_to_json(t.q_projection)},
                          {"diagnostics", t.diagnostics}});
  out["tau"] = t.tau ? matrix_to_json(*t.tau) : Json(nullptr);
  return out;
}

Json instance_to_json(const CorpusInstance& inst) {
  Json expected = Json::object();
  for (const auto& [key, e] : inst.expected) {
    Json entry = {{"value", value_to_json(e.value)}, {"provenance", e.provenance}};
    if (!e.oracle.empty()) entry["oracle"] = e.oracle;
    expected[key] = std::move(entry);
  }
  Json out = with_format({{"name", inst.name}, {"algebra", algebra_to_json(inst.algebra)}, {"expected", expected}});
  if (inst.module) out["module"] = bimodule_to_json(*inst.module);
  if (inst.idempotent) out["p"] = vector_to_json(*inst.idempotent);
  if (inst.triangular) out["triangular"] = triangular_to_json(*inst.triangular);
  if (inst.base_map) out["base_map"] = matrix_to_json(*inst.base_map);
  return out;
}

Json campaign_to_json(const CampaignReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"instance", e.instance},
                       {"suite", e.suite},
                       {"invariant", e.invariant},
                       {"status", e.status},
                       {"details", e.details}});
  }
  return with_format({{"success", r.success()},
                      {"counts", {{"pass", r.count("pass")}, {"fail", r.count("fail")}, {"skip", r.count("skip")}}},
                      {"entries", std::move(entries)}});
}

}  // namespace liederiv::io
