#pragma once

// JSON forms of the library types. Rationals and radicals travel as exact
// strings ("p/q", "1-3/4*sqrt(7)"); class ranks and degrees as integers.
// Every from_json throws std::invalid_argument on malformed input.

#include <json.hpp>

#include "tiltwall/hntree.hpp"
#include "tiltwall/lattice.hpp"
#include "tiltwall/piecewise.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

using Json = nlohmann::json;

Json to_json(const ChernClass& v);
ChernClass class_from_json(const Json& j);

Json to_json(const SurfaceConfig& cfg);
SurfaceConfig config_from_json(const Json& j);

Json to_json(const NumericalWall& w);
NumericalWall wall_from_json(const Json& j);

Json to_json(const HNTree& t);
HNTree tree_from_json(const Json& j);

Json to_json(const PiecewiseQuadratic& f);
PiecewiseQuadratic function_from_json(const Json& j);

Json to_json(const WallCandidate& c);
WallCandidate candidate_from_json(const Json& j);

Json to_json(const BreakpointReport& r);
Json to_json(const ValidationReport& r);
Json to_json(const HNFactor& f);

/// Parse text, mapping parse errors to std::invalid_argument.
Json parse_json_text(const std::string& text);

}  // namespace tiltwall
