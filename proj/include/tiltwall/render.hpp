#pragma once

// Text, CSV and SVG renderings. Numbers are exact unless an approximation
// column is requested; SVG coordinates are the only floating point output.

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/hntree.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

/// 6 significant digits.
std::string approx(double x);

/// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

std::string render_candidates_table(const std::vector<WallCandidate>& cands, bool with_approx);
/// center,radius_sq,cross_a,witness_v0,witness_v1,witness_v2[,radius_approx,cross_a_approx]
std::string render_candidates_csv(const std::vector<WallCandidate>& cands, bool with_approx);

std::string render_function_table(const PiecewiseQuadratic& f, bool with_approx);
/// x,value[,value_approx] on the grid lo, lo + step, ..., <= hi.
std::string render_function_csv(const PiecewiseQuadratic& f, const Rational& lo, const Rational& hi,
                                const Rational& step, bool with_approx);

std::string render_breakpoints_table(const std::vector<BreakpointReport>& reports, bool with_approx);
std::string render_factors_table(const std::vector<HNFactor>& factors, bool with_approx);
std::string render_validation(const ValidationReport& report);

/// The (beta, alpha) half-plane with the beta-axis, the vertical wall of v
/// (v0 != 0), the hyperbola H_v, the query line and every wall as an arc.
std::string render_walls_svg(const ChernClass& v, const Rational& beta_star, const std::vector<WallCandidate>& cands);

/// Graph of f over [lo, hi] with the breakpoints marked.
std::string render_function_svg(const PiecewiseQuadratic& f, const Rational& lo, const Rational& hi);

/// A plotting window around the breakpoints of f.
std::pair<Rational, Rational> default_window(const PiecewiseQuadratic& f);

}  // namespace tiltwall
