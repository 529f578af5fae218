#pragma once

// JSON formats.  All documents are UTF-8, version-tagged where they stand
// alone, emitted with a fixed key order and two-space indentation so that
// identical inputs give byte-identical files.  Readers reject unknown keys.

#include <string>

#include "json.hpp"

#include "trisect/core.hpp"
#include "trisect/explorer.hpp"
#include "trisect/planner.hpp"

namespace trisect::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const ArcClass& arc);
ArcClass arc_from_json(const Json& j);

Json to_json(const MoveRecord& record);
MoveRecord record_from_json(const Json& j);

Json to_json(const MoveScript& script);
MoveScript script_from_json(const Json& j);

/// {"version":1,"label":..,"genera":{..},"link":{"components":[..],"next_id":..},"history":[..]}
Json to_json(const TrisectionState& state);
TrisectionState state_from_json(const Json& j);

Json to_json(const SurfaceGenera& genera);
Json to_json(const MoveGraphNode& node);
Json to_json(const PlanReport& report);
Json to_json(const VerificationReport& report);

/// Serialized text with trailing newline.
std::string dump(const Json& j);

/// Throws FormatError on malformed text.
Json parse(const std::string& text);

}  // namespace trisect::io
