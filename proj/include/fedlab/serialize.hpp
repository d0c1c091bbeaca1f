#pragma once

#include <json.hpp>

#include "fedlab/fed.hpp"
#include "fedlab/game.hpp"
#include "fedlab/graph.hpp"

namespace fedlab {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings. Parsers throw Error(parse_error) on
// malformed input.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const FDFunction& w);
FDFunction fd_from_json(const Json& j);

Json to_json(const MovePlan& plan);
MovePlan plan_from_json(const Json& j);

Json to_json(const StrategyCertificate& c);
StrategyCertificate certificate_from_json(const Json& j);

Json to_json(const BoundEntry& e);
BoundEntry bound_entry_from_json(const Json& j);
Json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const Json& j);

Json to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j);

/// Text to JSON; throws Error(parse_error).
Json parse_json(const std::string& text);

}  // namespace fedlab
