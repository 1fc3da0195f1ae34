#pragma once

// Numerical walls in the (a, beta)-plane, a = alpha^2 / 2, and the finite
// search for classes that can define a wall crossing a vertical segment.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiltwall/exactnum.hpp"
#include "tiltwall/lattice.hpp"

namespace tiltwall {

struct Semicircle {
  Rational center;
  Rational radius_sq;
  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct VerticalLine {
  Rational beta;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

class NumericalWall {
 public:
  /// Throws std::invalid_argument unless radius_sq > 0.
  static NumericalWall semicircle(Rational center, Rational radius_sq);
  static NumericalWall vertical(Rational beta);

  bool is_semicircle() const { return std::holds_alternative<Semicircle>(shape_); }
  bool is_vertical() const { return !is_semicircle(); }
  /// Throws std::logic_error when the wall is of the other kind.
  const Semicircle& as_semicircle() const;
  const VerticalLine& as_vertical() const;

  /// radius = sqrt(radius_sq); semicircles only.
  QuadraticIrrational radius() const;
  std::string str() const;

  friend bool operator==(const NumericalWall&, const NumericalWall&) = default;

 private:
  explicit NumericalWall(std::variant<Semicircle, VerticalLine> shape) : shape_(std::move(shape)) {}
  std::variant<Semicircle, VerticalLine> shape_;
};

std::ostream& operator<<(std::ostream& os, const NumericalWall& w);

/// Locus nu(v) = nu(w); none for proportional classes or empty loci.
std::optional<NumericalWall> wall_between(const ChernClass& v, const ChernClass& w);

/// Height a of a semicircle above beta, none outside its span. Throws
/// std::invalid_argument("no height") for vertical walls.
std::optional<Rational> wall_a_at(const NumericalWall& wall, const Rational& beta);

enum class NestingKind { disjoint, nested, equal, crossing };

struct Nesting {
  NestingKind kind;
  /// For nested: 0 when the first argument is the inner wall, 1 otherwise.
  int inner = -1;
  friend bool operator==(const Nesting&, const Nesting&) = default;
};

/// Exact relative position of two semicircles. Walls tangent at the beta-axis
/// count as nested (internal tangency) or disjoint (external tangency).
Nesting nesting(const NumericalWall& w1, const NumericalWall& w2);

std::string to_string(NestingKind k);

struct WallCandidate {
  NumericalWall wall;
  /// Normalized witness: the lexicographically smaller of w and v - w.
  ChernClass witness;
  /// Every normalized witness found for this wall, ascending.
  std::vector<ChernClass> witnesses;
  Rational cross_a;

  friend bool operator==(const WallCandidate&, const WallCandidate&) = default;
};

struct EnumerationOptions {
  Rational a_min;
  /// Unbounded when empty: the admissible heights are finite regardless.
  std::optional<Rational> a_max;
  /// Require Delta(w) + Delta(v - w) < Delta(v) instead of <=.
  bool strict = false;
  unsigned threads = 1;
};

/// Candidate walls for v crossing {beta = beta_star, a_min <= a <= a_max},
/// sorted by crossing height, outermost first.
std::vector<WallCandidate> enumerate_candidates(const ChernClass& v, const Rational& beta_star,
                                                const EnumerationOptions& options, const SurfaceConfig& cfg);

/// Brute-force check that nu(v) - nu(w) changes sign exactly across `wall`
/// on a rational grid around it.
bool slope_crossing_oracle(const ChernClass& v, const ChernClass& w, const NumericalWall& wall,
                           const Rational& grid_step);

/// a-value of H_v above beta (v0 != 0): a = ch2^beta(v) / v0.
Rational hyperbola_a_at(const ChernClass& v, const Rational& beta);

/// Thread count from TILTWALL_THREADS, defaulting to the hardware count.
unsigned default_thread_count();

}  // namespace tiltwall
