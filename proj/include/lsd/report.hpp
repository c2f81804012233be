// SPDX-License-Identifier: Apache-2.0
//
// JSON forms of state specifications, matrices and report documents.
#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "lsd/decomposition.hpp"
#include "lsd/states.hpp"

namespace lsd {

using Json = nlohmann::json;

inline constexpr std::string_view kReportSchema = "lsd-report/1";

/// {"family": ..., family fields}. Throws ParseError on missing, mistyped or
/// unknown fields and UnsupportedSpec on an unknown family. Values are not
/// range-checked here; build() does that.
StateSpec spec_from_json(const Json& j);
Json spec_to_json(const StateSpec& spec);

/// {"dims": [...], "re": [[...]], "im": [[...]]}
Json matrix_to_json(const ComplexMat& m, const std::vector<std::size_t>& dims);
/// Throws ParseError. "im" may be omitted for real matrices.
ComplexMat matrix_from_json(const Json& j, std::vector<std::size_t>* dims = nullptr);

Json vector_to_json(const CVec& v);

/// Rebuilds the decomposition carried by a "decompose" report. The entangled
/// part is taken as stored; entangled_normalized is left empty.
LSDecomposition decomposition_from_report(const Json& report);

/// Structural check of an emitted report against kReportSchema. Throws
/// ParseError naming the first offending field.
void validate_report(const Json& report);

}  // namespace lsd
