#pragma once

#include <string>

#include "json.hpp"
#include "prymlab/covers.hpp"

namespace prymlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCoverSchema = "cover-v1";

Json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const Json& j, const std::string& where);

/// Serializes with a fixed key order: schema, base, total, action, quotient, ramification.
Json cover_to_json(const CoverDatum& c);

/// Parses and validates a cover-v1 document. Optional derived fields (edge
/// images, branch swaps, quotient, ramification) are checked against the
/// values computed from the action. Throws InvalidDataError naming the field.
CoverDatum cover_from_json(const Json& j);

CoverDatum load_cover(const std::string& path);
void save_cover(const CoverDatum& c, const std::string& path);

}  // namespace prymlab
