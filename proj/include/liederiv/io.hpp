#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "liederiv/algebra.hpp"
#include "liederiv/campaign.hpp"
#include "liederiv/corpus.hpp"
#include "liederiv/properness.hpp"
#include "liederiv/trivial_extension.hpp"

namespace liederiv::io {

using Json = nlohmann::json;

inline constexpr const char* kFormat = "liederiv/1";

/// Parses a file; InputError(malformed-json) on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {format, rows, cols, entries: [[...], ...]} row-major.
Json matrix_to_json(const Matrix& m);
/// Accepts the object form or a bare nested array of rows.
Matrix matrix_from_json(const Json& j);

/// {format, dim, labels, unit, mul: c[i][j][k]}.
Json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const Json& j);

/// {format, dim, left_dim, right_dim, left: l[i][j][k], right: r[j][i][k]}.
/// left_dim / right_dim are optional on input when they can be read off the tensors.
Json bimodule_to_json(const Bimodule& x);
Bimodule bimodule_from_json(const Json& j);

/// An idempotent or any vector: a bare array or {format, vector}.
Vector element_from_json(const Json& j);

/// {format, A, X, B}.
TriangularParts triangular_from_json(const Json& j);
Json triangular_to_json(const TriangularParts& t);

/// {format, A, X}.
Json extension_to_json(const TrivialExtension& ext);

Json subspace_to_json(const Subspace& s);
/// Basis of a subspace of flattened n x n endomaps, as matrices.
Json map_space_to_json(const Subspace& s, std::size_t n);

Json dims_to_json(const SpaceDims& d);
Json certificate_to_json(const PropernessCertificate& c);
Json validation_to_json(const ValidationReport& r);
Json base_witness_to_json(const BaseWitnessResult& r, bool proper);
/// `label` is "2.4" or "3.1"; conditions are labelled "<label>(I)", "<label>(II)(i)", "<label>(II)(ii)".
Json sufficiency_to_json(const SufficiencyReport& r, const std::string& label);
Json tau_to_json(const TauResult& t);
Json instance_to_json(const CorpusInstance& inst);
Json campaign_to_json(const CampaignReport& r);

}  // namespace liederiv::io
