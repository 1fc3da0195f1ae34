#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/exactnum.hpp"

namespace tiltwall {

/// A continuous function on the real line given by quadratic pieces between
/// ascending algebraic breakpoints; pieces.size() == breakpoints.size() + 1.
struct PiecewiseQuadratic {
  std::vector<QuadraticIrrational> breakpoints;
  std::vector<QuadPoly> pieces;

  /// Throws std::invalid_argument when the shape is inconsistent.
  void check_shape() const;

  /// Index of the piece used at x (the left piece at a breakpoint).
  std::size_t piece_index(const QuadraticIrrational& x) const;
  QuadraticIrrational operator()(const QuadraticIrrational& x) const;
  QuadraticIrrational left_derivative(std::size_t breakpoint) const;
  QuadraticIrrational right_derivative(std::size_t breakpoint) const;

  /// Adjacent pieces agree at every breakpoint.
  bool is_continuous() const;
  /// Every piece is >= 0 on its interval intersected with (lower, +inf).
  bool is_nonnegative(const std::optional<QuadraticIrrational>& lower = std::nullopt) const;
  /// Sign of the derivative on each interval intersected with (lower, +inf):
  /// +1 checks non-decreasing, -1 non-increasing.
  bool is_monotone(int direction, const std::optional<QuadraticIrrational>& lower = std::nullopt) const;

  std::string str() const;

  friend bool operator==(const PiecewiseQuadratic&, const PiecewiseQuadratic&) = default;
};

std::ostream& operator<<(std::ostream& os, const PiecewiseQuadratic& f);

/// f(x) -> f(-x): breakpoints negated and reversed.
PiecewiseQuadratic serre_dual_function(const PiecewiseQuadratic& f);

/// Pointwise f - p.
PiecewiseQuadratic subtract(const PiecewiseQuadratic& f, const QuadPoly& p);

}  // namespace tiltwall
