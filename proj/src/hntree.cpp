#include "tiltwall/hntree.hpp"

#include <algorithm>
#include <sstream>

namespace tiltwall {

HNTree HNTree::trivial(ChernClass cls, std::string label) {
  return HNTree{HNNode{std::move(cls), std::nullopt, {}, std::move(label)}};
}

namespace {

void collect_leaves(const HNNode& node, const std::string& path, std::vector<LeafInfo>& out) {
  if (node.is_leaf()) {
    out.push_back({path, node.cls, p_intercept(node.cls), node.label});
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    collect_leaves(node.children[i], path + "/" + std::to_string(i), out);
  }
}

class Validator {
 public:
  explicit Validator(const SurfaceConfig* cfg) : cfg_(cfg) {}

  void visit(const HNNode& node, const std::string& path, const NumericalWall* parent_wall) {
    if (cfg_) {
      if (auto why = lattice_violation(node.cls, *cfg_)) fail(path, "lattice", *why);
    }
    if (node.is_leaf()) {
      if (node.wall) fail(path, "leaf-wall", "a leaf carries no wall");
      try {
        (void)p_intercept(node.cls);
      } catch (const std::exception& e) {
        fail(path, "leaf-intercept", node.cls.str() + ": " + e.what());
      }
      return;
    }
    if (node.children.size() < 2) fail(path, "children-count", "an internal node needs at least two children");
    ChernClass sum{0L, 0L, Rational()};
    Rational child_delta;
    for (const auto& child : node.children) {
      sum += child.cls;
      child_delta += discriminant(child.cls);
    }
    if (sum != node.cls) fail(path, "class-sum", "children sum to " + sum.str() + ", node is " + node.cls.str());
    const Rational delta = discriminant(node.cls);
    if (node.children.size() >= 2 && !(child_delta < delta)) {
      fail(path, "discriminant-drop", "sum of child discriminants " + child_delta.str() + " is not < " + delta.str());
    }
    if (!node.wall) {
      fail(path, "wall-missing", "internal node without a wall");
    } else if (!node.wall->is_semicircle()) {
      fail(path, "wall-kind", "internal wall must be a semicircle, got " + node.wall->str());
    } else if (parent_wall && parent_wall->is_semicircle()) {
      const Nesting n = nesting(*node.wall, *parent_wall);
      if (!(n.kind == NestingKind::nested && n.inner == 0)) {
        fail(path, "nesting", node.wall->str() + " is not strictly inside " + parent_wall->str() + " (" +
                                  to_string(n.kind) + ")");
      }
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const auto& child = node.children[i];
      const std::string child_path = path + "/" + std::to_string(i);
      if (discriminant(child.cls).sign() < 0) {
        fail(child_path, "child-discriminant", child.cls.str() + " has negative discriminant");
      }
      if (node.wall) {
        const auto w = wall_between(node.cls, child.cls);
        if (!w || !(*w == *node.wall)) {
          fail(child_path, "co-slope",
               "wall with parent is " + (w ? w->str() : std::string("none")) + ", expected " + node.wall->str());
        }
      }
      visit(child, child_path, node.wall ? &*node.wall : nullptr);
    }
  }

  void fail(const std::string& path, const std::string& invariant, const std::string& detail) {
    report_.violations.push_back({path, invariant, detail});
  }

  ValidationReport take() { return std::move(report_); }

 private:
  const SurfaceConfig* cfg_;
  ValidationReport report_;
};

void require_valid(const HNTree& tree) {
  ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw TreeValidationError(std::move(report));
}

std::string join_labels(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

void cut(const HNNode& node, const Rational& a, const Rational& beta, std::vector<HNFactor>& out) {
  if (!node.is_leaf() && node.wall && node.wall->is_semicircle()) {
    const auto height = wall_a_at(*node.wall, beta);
    if (height && a == *height) throw std::invalid_argument("point lies on a wall; filtration not unique");
    if (height && a < *height) {
      for (const auto& child : node.children) cut(child, a, beta, out);
      return;
    }
  }
  out.push_back({node.cls, tilt_slope(node.cls, a, beta), node.label});
}

}  // namespace

std::vector<LeafInfo> tree_leaves(const HNTree& tree) {
  std::vector<LeafInfo> out;
  collect_leaves(tree.root, "root", out);
  return out;
}

std::string ValidationReport::str() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) os << "\n";
    os << violations[i].path << ": " << violations[i].invariant << ": " << violations[i].detail;
  }
  return os.str();
}

ValidationReport validate_tree(const HNTree& tree, const SurfaceConfig* cfg) {
  Validator validator(cfg);
  validator.visit(tree.root, "root", nullptr);
  ValidationReport report = validator.take();
  if (!report.ok()) return report;
  const auto leaves = tree_leaves(tree);
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (leaves[i - 1].p.value < leaves[i].p.value) {
      report.violations.push_back({leaves[i].path, "well-ordered",
                                   "p = " + leaves[i].p.value.str() + " follows p = " + leaves[i - 1].p.value.str()});
    }
  }
  return report;
}

TreeValidationError::TreeValidationError(ValidationReport report)
    : std::invalid_argument("tree validation failed: " + report.str()), report_(std::move(report)) {}

std::vector<HNFactor> hn_factors_at(const HNTree& tree, const Rational& a, const Rational& beta) {
  if (a.sign() < 0) throw std::invalid_argument("a must be >= 0");
  const ChernClass& root = tree.root_class();
  if (root.v0 > 0 && !(beta < Rational(root.v1, root.v0))) {
    throw std::invalid_argument("beta must lie left of the vertical wall");
  }
  std::vector<HNFactor> factors;
  cut(tree.root, a, beta, factors);
  if (!a.is_zero()) return factors;
  std::vector<HNFactor> merged;
  for (auto& f : factors) {
    if (!merged.empty() && merged.back().slope == f.slope) {
      merged.back().cls += f.cls;
      merged.back().label = join_labels(merged.back().label, f.label);
      continue;
    }
    merged.push_back(std::move(f));
  }
  return merged;
}

PiecewiseQuadratic assemble_chd0(const HNTree& tree) {
  require_valid(tree);
  const auto leaves = tree_leaves(tree);
  std::vector<QuadraticIrrational> xs;
  for (const auto& leaf : leaves) xs.push_back(-leaf.p.value);
  std::vector<QuadraticIrrational> breakpoints = xs;
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  PiecewiseQuadratic f;
  f.breakpoints = breakpoints;
  f.pieces.push_back(QuadPoly{});
  for (const auto& b : breakpoints) {
    QuadPoly piece;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (xs[i] <= b) piece += chd_polynomial(leaves[i].cls);
    }
    f.pieces.push_back(piece);
  }
  return f;
}

PiecewiseQuadratic assemble_chd1(const HNTree& tree) {
  return subtract(assemble_chd0(tree), chd_polynomial(tree.root_class()));
}

PiecewiseQuadratic trivial_chd(const ChernClass& v) {
  if (discriminant(v).sign() < 0) throw std::invalid_argument("negative discriminant");
  const QuadPoly p = chd_polynomial(v);
  const QuadRoots roots = quad_roots(p);
  if (roots.values.empty()) throw std::invalid_argument("no real root");
  return PiecewiseQuadratic{{roots.values.back()}, {QuadPoly{}, p}};
}

std::vector<BreakpointReport> classify_breakpoints(const HNTree& tree) {
  const PiecewiseQuadratic f = assemble_chd0(tree);
  const auto leaves = tree_leaves(tree);
  std::vector<BreakpointReport> out;
  for (const auto& b : f.breakpoints) {
    BreakpointReport report;
    report.x = b;
    bool witnessed_a = false;
    bool flat_leaf = false;
    std::string a_reason;
    for (const auto& leaf : leaves) {
      if (-leaf.p.value != b) continue;
      report.contributing_leaves.push_back(leaf);
      const Rational delta = discriminant(leaf.cls);
      report.derivative_jump += QuadraticIrrational::sqrt(delta);
      if (delta.sign() > 0 && leaf.p.value.is_rational()) {
        witnessed_a = true;
        a_reason += (a_reason.empty() ? "" : ", ") + leaf.cls.str();
      }
      if (delta.is_zero()) flat_leaf = true;
    }
    report.differentiable = report.derivative_jump.sign() == 0;
    report.overlap = report.contributing_leaves.size() >= 2;
    if (witnessed_a) {
      report.tags.push_back({"a", TagStatus::numerically_witnessed,
                             "factor of vanishing tilt slope with Delta > 0: " + a_reason});
    }
    if (flat_leaf) {
      report.tags.push_back({"b|c", TagStatus::requires_geometric_input,
                             "Delta = 0 leaf; telling (b) from (c) needs the core filtrations"});
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::string to_string(TagStatus s) {
  return s == TagStatus::numerically_witnessed ? "numerically witnessed" : "requires geometric input";
}

}  // namespace tiltwall
