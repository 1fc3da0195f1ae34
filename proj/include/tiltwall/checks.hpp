#pragma once

// Regression and property suites behind `tiltwall check` and the acceptance
// runner. Each check reports pass/fail with a short detail line.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tiltwall/catalog.hpp"

namespace tiltwall {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  std::uint64_t seed = 20261017;
  int random_classes = 1000;
  int random_trees = 1000;
  int rigid_classes = 100;
  int hn_points = 50;
  unsigned threads = 1;
};

std::vector<CheckResult> run_regression_checks();
std::vector<CheckResult> run_property_checks(const CheckOptions& options);
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

/// suite | check | result | detail, plus a summary line.
std::string render_check_matrix(const std::vector<CheckResult>& results);

/// Random lattice class with 0 <= Delta <= max_delta and v0 in
/// {-3..3} * v0_step (v0 > 0 when positive_rank).
ChernClass random_class(std::mt19937_64& rng, const SurfaceConfig& cfg, long max_delta, bool positive_rank);
/// Random Delta = 0 lattice class with v0 != 0.
ChernClass random_rigid_class(std::mt19937_64& rng, const SurfaceConfig& cfg);
/// Random rational beta strictly on the admissible side of mu(v).
Rational random_beta(std::mt19937_64& rng, const ChernClass& v);

/// Grows a random destabilization tree for v from enumerated candidates;
/// the result may still fail validation (e.g. well-orderedness), callers
/// filter with validate_tree.
HNTree random_tree(std::mt19937_64& rng, const ChernClass& v, const SurfaceConfig& cfg, int depth);

struct ScaleQuery {
  ChernClass cls;
  Rational beta;
};

/// Every lattice class with integral v2, 0 <= Delta <= max_delta and
/// 0 <= v0 <= max_v0, up to integer twist (0 <= v1 < v0, or 0 <= v2 < v1 in
/// rank zero). Positive rank is queried at mu - 1/2 and mu - 2, rank zero
/// at v2/v1 - 1/2.
std::vector<ScaleQuery> scale_probe_queries(const SurfaceConfig& cfg, long max_delta, long max_v0);

struct ScaleProbe {
  std::size_t queries = 0;
  std::size_t walls = 0;
  unsigned threads = 1;
  double serial_seconds = 0;
  double parallel_seconds = 0;
  bool identical = false;
};

/// Runs every query at a_min serially and with `threads` workers.
ScaleProbe run_scale_probe(const std::vector<ScaleQuery>& queries, const Rational& a_min,
                           const SurfaceConfig& cfg, unsigned threads);

}  // namespace tiltwall
