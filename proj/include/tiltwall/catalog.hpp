#pragma once

// Built-in worked examples on abelian surfaces: ideal sheaves of points on a
// principally polarized abelian surface, an ideal of a point on a
// (1,2)-polarized one, the structure sheaf and a degree one line bundle on an
// Abel-Jacobi curve.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltwall/hntree.hpp"
#include "tiltwall/serialize.hpp"

namespace tiltwall {

struct ExpectedWall {
  ChernClass cls;       // the class the wall belongs to
  NumericalWall wall;
  Rational beta;        // a vertical query line crossing the wall
};

struct ExpectedBreakpoint {
  QI x;
  QI jump;
  bool overlap = false;
};

struct Scenario {
  std::string id;
  std::string preset;
  SurfaceConfig config;
  ChernClass cls;
  /// Empty for wall-only scenarios.
  std::optional<HNTree> tree;
  bool trivial = false;
  std::optional<PiecewiseQuadratic> expected_chd0;
  std::vector<ExpectedWall> expected_walls;
  std::vector<ExpectedBreakpoint> expected_breakpoints;
  std::string notes;
};

const std::vector<Scenario>& all_scenarios();
std::vector<std::string> list_scenarios();
/// Throws std::invalid_argument for unknown ids.
const Scenario& load_scenario(std::string_view id);

/// Scenario with its tree in the tree JSON format.
Json export_scenario(const Scenario& s);

}  // namespace tiltwall
