#pragma once

// Destabilization trees: each internal node records the wall along which its
// class splits and the classes of the HN factors just below it; leaves are
// classes that stay semistable near (0, p_G). Trees are supplied as data and
// checked numerically, never inferred.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiltwall/exactnum.hpp"
#include "tiltwall/lattice.hpp"
#include "tiltwall/piecewise.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

struct HNNode {
  ChernClass cls;
  std::optional<NumericalWall> wall;  // internal nodes only
  std::vector<HNNode> children;       // in HN order, subobject first
  std::string label;

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const HNNode&, const HNNode&) = default;
};

struct HNTree {
  HNNode root;

  const ChernClass& root_class() const { return root.cls; }
  /// A single leaf.
  static HNTree trivial(ChernClass cls, std::string label = {});
  friend bool operator==(const HNTree&, const HNTree&) = default;
};

struct LeafInfo {
  std::string path;  // "root/1/0"
  ChernClass cls;
  Intercept p;
  std::string label;
};

/// Leaves in lexicographic (depth-first) order; throws when a leaf has no
/// hyperbola intercept.
std::vector<LeafInfo> tree_leaves(const HNTree& tree);

struct Violation {
  std::string path;
  std::string invariant;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Checks class additivity, co-slope walls, discriminant drop, strict wall
/// nesting, leaf intercepts and well-orderedness; with a config also the
/// lattice membership of every node.
ValidationReport validate_tree(const HNTree& tree, const SurfaceConfig* cfg = nullptr);

class TreeValidationError : public std::invalid_argument {
 public:
  explicit TreeValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct HNFactor {
  ChernClass cls;
  Slope slope;
  std::string label;
};

/// HN factors of the root at (a, beta), obtained by cutting the tree at the
/// walls that enclose the point. At a = 0 factors of equal slope merge.
std::vector<HNFactor> hn_factors_at(const HNTree& tree, const Rational& a, const Rational& beta);

/// chd^0 of the root on x > -mu(root) assembled from leaf intercepts.
PiecewiseQuadratic assemble_chd0(const HNTree& tree);
/// chd^0 - ch2^{-x}(root).
PiecewiseQuadratic assemble_chd1(const HNTree& tree);
/// {0 | x <= r; ch2^{-x}(v) | x >= r} with r the largest root.
PiecewiseQuadratic trivial_chd(const ChernClass& v);

enum class TagStatus { numerically_witnessed, requires_geometric_input };

struct ConditionTag {
  /// 'a' (HN factor of vanishing slope), or 'b'/'c' candidates.
  std::string conditions;
  TagStatus status;
  std::string reason;
};

struct BreakpointReport {
  QuadraticIrrational x;
  std::vector<LeafInfo> contributing_leaves;
  QuadraticIrrational derivative_jump;
  bool differentiable = true;
  bool overlap = false;
  std::vector<ConditionTag> tags;
};

std::vector<BreakpointReport> classify_breakpoints(const HNTree& tree);

std::string to_string(TagStatus s);

}  // namespace tiltwall
