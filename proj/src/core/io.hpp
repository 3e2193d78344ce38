#pragma once

#include "core/fixtures.hpp"

#include <json.hpp>

#include <string>

namespace liedist {

/// Input schema:
///   { "dim": n, "basis": [names...],
///     "brackets": { "i,j": { "k": scalar } },
///     "levi": [vector...], "subgroups": { name: [vector...] },
///     "rep": { "matrices": [ d x d scalar grid per basis element ],
///              "faithful": bool } }
/// Scalars are integers, [num, den] rationals, or [re_num, re_den, im_num,
/// im_den] quadruples; omitted bracket entries are zero. Indices are
/// 0-based positions in "basis".
Fixture fixture_from_json(const nlohmann::json& j, const std::string& name);

nlohmann::json fixture_to_json(const Fixture& f);

/// Parses JSON text; parse failures carry the byte position.
Fixture parse_input_text(const std::string& text, const std::string& display_name);

/// Builtin fixture name, else a path to a JSON file.
Fixture load_input(const std::string& path_or_name);

/// FNV-1a over the canonical serialization; embedded in reports.
std::string input_digest(const Fixture& f);

nlohmann::json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const nlohmann::json& j);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace liedist
