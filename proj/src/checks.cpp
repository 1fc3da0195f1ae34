#include "tiltwall/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "tiltwall/render.hpp"

namespace tiltwall {

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Collects failures; a check passes when none were recorded.
struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
  std::string detail() const {
    std::ostringstream os;
    os << cases << " cases";
    if (failures) os << ", " << failures << " failed; first: " << first;
    return os.str();
  }
};

CheckResult timed(std::string suite, std::string name, const std::function<Tally()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  try {
    const Tally t = body();
    r.passed = t.failures == 0 && t.cases > 0;
    r.detail = t.detail();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

EnumerationOptions enum_options(const Rational& a_min, unsigned threads = 1) {
  EnumerationOptions o;
  o.a_min = a_min;
  o.threads = threads;
  return o;
}

bool has_wall(const std::vector<WallCandidate>& cands, const NumericalWall& w) {
  return std::any_of(cands.begin(), cands.end(), [&](const WallCandidate& c) { return c.wall == w; });
}

std::vector<const HNNode*> internal_nodes(const HNTree& t) {
  std::vector<const HNNode*> out, stack{&t.root};
  while (!stack.empty()) {
    const HNNode* n = stack.back();
    stack.pop_back();
    if (n->wall) out.push_back(n);
    for (const auto& c : n->children) stack.push_back(&c);
  }
  return out;
}

Tally check_function_identities(const HNTree& t, Tally tally) {
  const std::string id = t.root_class().str();
  const auto f0 = assemble_chd0(t);
  const auto f1 = assemble_chd1(t);
  const QuadPoly root = chd_polynomial(t.root_class());
  const QI lower(-Rational(t.root_class().v1, t.root_class().v0));
  for (std::size_t i = 0; i < f0.pieces.size(); ++i) {
    tally.expect(f0.pieces[i] - f1.pieces[i] == root, "alternating identity " + id);
  }
  tally.expect(f0.is_continuous() && f1.is_continuous(), "continuity " + id);
  tally.expect(f0.is_nonnegative() && f1.is_nonnegative(lower), "nonnegativity " + id);
  tally.expect(f0.is_monotone(+1, lower) && f1.is_monotone(-1, lower), "monotonicity " + id);
  const auto reports = classify_breakpoints(t);
  tally.expect(reports.size() == f0.breakpoints.size(), "breakpoint count " + id);
  for (std::size_t i = 0; i < reports.size() && i < f0.breakpoints.size(); ++i) {
    QI sum;
    for (const auto& l : reports[i].contributing_leaves) sum = sum + QI::sqrt(discriminant(l.cls));
    tally.expect(sum == reports[i].derivative_jump, "symbolic jump " + id);
    tally.expect(f0.right_derivative(i) - f0.left_derivative(i) == reports[i].derivative_jump, "jump law " + id);
  }
  tally.expect(serre_dual_function(serre_dual_function(f0)) == f0, "serre involution " + id);
  return tally;
}

}  // namespace

ChernClass random_class(std::mt19937_64& rng, const SurfaceConfig& cfg, long max_delta, bool positive_rank) {
  while (true) {
    const long k0 = positive_rank ? uniform(rng, 1, 3) : uniform(rng, -3, 3);
    const long k1 = uniform(rng, -6, 6);
    const long n = uniform(rng, -12 * cfg.v2_denominator, 12 * cfg.v2_denominator);
    const ChernClass v{Integer(k0 * cfg.v0_step), Integer(k1 * cfg.v1_step),
                       Rational(Integer(n), Integer(cfg.v2_denominator))};
    const Rational d = discriminant(v);
    if (d.sign() < 0 || d > Rational(max_delta)) continue;
    if (v.v0 == 0 && v.v1 <= 0) continue;
    return v;
  }
}

ChernClass random_rigid_class(std::mt19937_64& rng, const SurfaceConfig& cfg) {
  // Delta = 0 means v1^2 = 2 v0 v2.
  while (true) {
    long k0 = uniform(rng, 1, 4);
    if (uniform(rng, 0, 1)) k0 = -k0;
    const long k1 = uniform(rng, -8, 8);
    const Integer v0(k0 * cfg.v0_step), v1(k1 * cfg.v1_step);
    const Rational v2 = Rational(Integer(v1 * v1)) / Rational(Integer(2 * v0));
    const ChernClass v{v0, v1, v2};
    if (!lattice_violation(v, cfg)) return v;
  }
}

Rational random_beta(std::mt19937_64& rng, const ChernClass& v) {
  const Rational off(Integer(uniform(rng, 1, 16)), Integer(uniform(rng, 1, 4)));
  if (v.v0 == 0) return uniform(rng, 0, 1) ? off : -off;
  const Rational mu(v.v1, v.v0);
  return v.v0 > 0 ? mu - off : mu + off;
}

namespace {

bool admissible_query(const ChernClass& v, const Rational& beta) {
  if (discriminant(v).sign() <= 0) return false;
  if (v.v0 == 0) return v.v1 > 0;
  const Rational mu(v.v1, v.v0);
  return v.v0 > 0 ? beta < mu : mu < beta;
}

HNNode grow(std::mt19937_64& rng, const ChernClass& v, const SurfaceConfig& cfg, int depth,
            const std::optional<NumericalWall>& outer) {
  HNNode node{v, std::nullopt, {}, {}};
  if (depth == 0 || discriminant(v).sign() == 0) return node;
  if (outer && uniform(rng, 0, 2) == 0) return node;
  const Rational beta = outer ? outer->as_semicircle().center : random_beta(rng, v);
  if (!admissible_query(v, beta)) return node;
  auto cands = enumerate_candidates(v, beta, enum_options(q("1/64")), cfg);
  std::vector<std::pair<const WallCandidate*, const ChernClass*>> choices;
  for (const auto& c : cands) {
    if (outer) {
      const Nesting n = nesting(*outer, c.wall);
      if (n.kind != NestingKind::nested || n.inner != 1) continue;
    }
    for (const auto& w : c.witnesses) {
      if (discriminant(w) + discriminant(v - w) < discriminant(v)) choices.emplace_back(&c, &w);
    }
  }
  if (choices.empty()) return node;
  const auto [cand, witness] = choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(choices.size()) - 1))];
  // The subobject has the larger slope just inside the wall.
  const auto& s = cand->wall.as_semicircle();
  const Rational a_in = s.radius_sq / Rational(4);
  ChernClass sub = *witness, quot = v - *witness;
  if (tilt_slope(sub, a_in, s.center) < tilt_slope(quot, a_in, s.center)) std::swap(sub, quot);
  node.wall = cand->wall;
  node.children.push_back(grow(rng, sub, cfg, depth - 1, cand->wall));
  node.children.push_back(grow(rng, quot, cfg, depth - 1, cand->wall));
  return node;
}

}  // namespace

HNTree random_tree(std::mt19937_64& rng, const ChernClass& v, const SurfaceConfig& cfg, int depth) {
  return {grow(rng, v, cfg, depth, std::nullopt)};
}

std::vector<CheckResult> run_regression_checks() {
  std::vector<CheckResult> out;
  const SurfaceConfig ppas = SurfaceConfig::preset("ppas");
  auto cc = [](long a, long b, const char* c) { return ChernClass(a, b, q(c)); };

  out.push_back(timed("walls", "two decompositions define one wall", [&] {
    Tally t;
    const auto w = NumericalWall::semicircle(q("-3/2"), q("1/4"));
    t.expect(wall_between(cc(2, 0, "-2"), cc(4, -4, "2")) == w, "(4,-4,2)");
    t.expect(wall_between(cc(2, 0, "-2"), cc(2, -2, "1")) == w, "(2,-2,1)");
    return t;
  }));
  out.push_back(timed("walls", "unique wall for (2,0,-4) at beta=-2", [&] {
    Tally t;
    const auto c = enumerate_candidates(cc(2, 0, "-4"), Rational(-2), enum_options(q("1/100")), ppas);
    t.expect(c.size() == 1, "count");
    t.expect(!c.empty() && c[0].wall == NumericalWall::semicircle(q("-5/2"), q("9/4")) && c[0].cross_a == Rational(1),
             "wall");
    return t;
  }));
  out.push_back(timed("walls", "three walls for (2,0,-5) at beta=-2", [&] {
    Tally t;
    const auto c = enumerate_candidates(cc(2, 0, "-5"), Rational(-2), enum_options(q("1/100")), ppas);
    const char* want[3][3] = {{"-3", "4", "3/2"}, {"-5/2", "5/4", "1/2"}, {"-7/3", "4/9", "1/6"}};
    t.expect(c.size() == 3, "count");
    for (std::size_t i = 0; i < 3 && i < c.size(); ++i) {
      t.expect(c[i].wall == NumericalWall::semicircle(q(want[i][0]), q(want[i][1])) && c[i].cross_a == q(want[i][2]),
               "wall " + std::to_string(i + 1));
    }
    return t;
  }));
  out.push_back(timed("walls", "wall (-7/4, 1/16) for (2,0,-3)", [&] {
    Tally t;
    const auto c = enumerate_candidates(cc(2, 0, "-3"), q("-7/4"), enum_options(q("1/100")), ppas);
    t.expect(has_wall(c, NumericalWall::semicircle(q("-7/4"), q("1/16"))), "present");
    return t;
  }));
  out.push_back(timed("walls", "oracle confirms and rejects", [&] {
    Tally t;
    for (const char* b : {"-2"}) {
      for (const auto& c : enumerate_candidates(cc(2, 0, "-5"), q(b), enum_options(q("1/100")), ppas)) {
        t.expect(slope_crossing_oracle(cc(2, 0, "-5"), c.witness, c.wall, q("1/64")), "confirm " + c.wall.str());
        const auto& s = c.wall.as_semicircle();
        const auto moved = NumericalWall::semicircle(s.center + q("1/32"), s.radius_sq);
        t.expect(!slope_crossing_oracle(cc(2, 0, "-5"), c.witness, moved, q("1/64")), "reject " + moved.str());
      }
    }
    const auto c4 = enumerate_candidates(cc(2, 0, "-4"), Rational(-2), enum_options(q("1/100")), ppas);
    for (const auto& c : c4) t.expect(slope_crossing_oracle(cc(2, 0, "-4"), c.witness, c.wall, q("1/64")), "n=4");
    t.expect(slope_crossing_oracle(cc(2, 0, "-2"), cc(4, -4, "2"), NumericalWall::semicircle(q("-3/2"), q("1/4")),
                                   q("1/64")),
             "n=2");
    t.expect(!slope_crossing_oracle(cc(2, 0, "-2"), cc(4, -4, "2"), NumericalWall::semicircle(q("-47/32"), q("1/4")),
                                    q("1/64")),
             "n=2 perturbed");
    t.expect(slope_crossing_oracle(cc(2, 0, "-2"), cc(0, 0, "1"), NumericalWall::vertical(Rational(0)), q("1/64")),
             "skyscraper");
    return t;
  }));
  out.push_back(timed("functions", "sqrt(2) breakpoint of (2,0,-2)", [&] {
    Tally t;
    const auto f = trivial_chd(cc(2, 0, "-2"));
    t.expect(f.breakpoints.size() == 1 && f.breakpoints[0] == QI::sqrt(Rational(2)), "breakpoint");
    t.expect(f.is_continuous(), "continuity");
    return t;
  }));

  for (const auto& s : all_scenarios()) {
    out.push_back(timed("catalog", s.id, [&] {
      Tally t;
      if (s.tree) {
        const auto report = validate_tree(*s.tree, &s.config);
        t.expect(report.ok(), "validate: " + report.str());
        const auto f = assemble_chd0(*s.tree);
        t.expect(s.expected_chd0 && f == *s.expected_chd0, "chd0 " + f.str());
        t.expect(f.is_continuous(), "continuity");
        if (s.trivial) t.expect(trivial_chd(s.cls) == f, "trivial chd");
        const auto reps = classify_breakpoints(*s.tree);
        t.expect(reps.size() == s.expected_breakpoints.size(), "breakpoint count");
        for (std::size_t i = 0; i < reps.size() && i < s.expected_breakpoints.size(); ++i) {
          const auto& e = s.expected_breakpoints[i];
          t.expect(reps[i].x == e.x && reps[i].derivative_jump == e.jump && reps[i].overlap == e.overlap,
                   "breakpoint " + e.x.str());
          t.expect(f.right_derivative(i) - f.left_derivative(i) == reps[i].derivative_jump, "jump " + e.x.str());
        }
        for (const HNNode* n : internal_nodes(*s.tree)) {
          t.expect(std::any_of(s.expected_walls.begin(), s.expected_walls.end(),
                               [&](const ExpectedWall& e) { return e.cls == n->cls && e.wall == *n->wall; }),
                   "tree wall recorded " + n->wall->str());
        }
      }
      for (const auto& w : s.expected_walls) {
        const auto a = wall_a_at(w.wall, w.beta);
        t.expect(a.has_value(), "query line crosses " + w.wall.str());
        if (!a) continue;
        const auto cands = enumerate_candidates(w.cls, w.beta, enum_options(std::min(q("1/100"), *a)), s.config);
        const auto it = std::find_if(cands.begin(), cands.end(), [&](const auto& c) { return c.wall == w.wall; });
        t.expect(it != cands.end(), "enumerated " + w.wall.str());
        if (it != cands.end()) {
          t.expect(slope_crossing_oracle(w.cls, it->witness, w.wall, q("1/64")), "oracle " + w.wall.str());
        }
      }
      return t;
    }));
  }
  return out;
}

std::vector<CheckResult> run_property_checks(const CheckOptions& opt) {
  std::vector<CheckResult> out;
  const SurfaceConfig ppas = SurfaceConfig::preset("ppas");
  const SurfaceConfig ab = SurfaceConfig::preset("abelian-(1,2)");

  out.push_back(timed("properties", "discriminant is twist invariant", [&] {
    std::mt19937_64 rng(opt.seed);
    Tally t;
    for (int i = 0; i < opt.random_classes; ++i) {
      const ChernClass v = random_class(rng, i % 2 ? ab : ppas, 200, false);
      const Rational beta(Integer(uniform(rng, -200, 200)), Integer(uniform(rng, 1, 30)));
      t.expect(discriminant(twist(v, beta)) == discriminant(v), v.str());
    }
    return t;
  }));

  out.push_back(timed("properties", "wall top points on H_v; same-side walls nested", [&] {
    std::mt19937_64 rng(opt.seed + 1);
    Tally t;
    for (int i = 0; i < opt.random_classes; ++i) {
      const SurfaceConfig& cfg = i % 4 == 3 ? ab : ppas;
      const ChernClass v = random_class(rng, cfg, 60, false);
      // close to the vertical wall, where walls are dense
      const Rational off(Integer(uniform(rng, 1, 12)), Integer(4));
      const Rational beta = v.v0 == 0 ? random_beta(rng, v) : Rational(v.v1, v.v0) + (v.v0 > 0 ? -off : off);
      const auto cands = enumerate_candidates(v, beta, enum_options(q("1/100"), opt.threads), cfg);
      for (std::size_t a = 0; a < cands.size(); ++a) {
        const auto& s = cands[a].wall.as_semicircle();
        t.expect(twist(v, s.center).t2 - s.radius_sq / Rational(2) * Rational(v.v0) == Rational(0),
                 "top point " + v.str() + " " + cands[a].wall.str());
        for (std::size_t b = 0; b < a; ++b) {
          t.expect(nesting(cands[b].wall, cands[a].wall) == Nesting{NestingKind::nested, 1},
                   "nesting " + v.str() + " " + cands[b].wall.str() + " " + cands[a].wall.str());
        }
      }
    }
    return t;
  }));

  out.push_back(timed("properties", "Delta = 0 classes have no walls", [&] {
    std::mt19937_64 rng(opt.seed + 2);
    Tally t;
    for (int i = 0; i < opt.rigid_classes; ++i) {
      const SurfaceConfig& cfg = i % 2 ? ab : ppas;
      const ChernClass v = random_rigid_class(rng, cfg);
      const Rational beta = random_beta(rng, v);
      const Rational a_min(Integer(1), Integer(uniform(rng, 10, 400)));
      t.expect(enumerate_candidates(v, beta, enum_options(a_min, opt.threads), cfg).empty(),
               v.str() + " at " + beta.str());
    }
    return t;
  }));

  out.push_back(timed("properties", "function identities on random trees", [&] {
    std::mt19937_64 rng(opt.seed + 3);
    Tally t;
    int trees = 0, deep = 0, attempts = 0;
    while (trees < opt.random_trees && attempts < 50 * opt.random_trees) {
      ++attempts;
      const SurfaceConfig& cfg = attempts % 4 == 0 ? ab : ppas;
      const ChernClass v = random_class(rng, cfg, 40, true);
      const HNTree tree = random_tree(rng, v, cfg, 3);
      if (tree.root.is_leaf()) continue;  // the segment met no wall
      const auto report = validate_tree(tree, &cfg);
      t.expect(report.ok(), "generated tree " + v.str() + ": " + report.str());
      if (!report.ok()) continue;
      ++trees;
      deep += std::any_of(tree.root.children.begin(), tree.root.children.end(),
                          [](const HNNode& c) { return !c.is_leaf(); });
      t = check_function_identities(tree, t);
    }
    t.expect(trees == opt.random_trees, "only " + std::to_string(trees) + " split trees");
    t.expect(deep * 10 >= trees, "too few trees of depth 2: " + std::to_string(deep));
    return t;
  }));

  out.push_back(timed("properties", "Serre duality on the structure sheaf", [&] {
    Tally t;
    const auto chd0 = trivial_chd(ChernClass(2, 0, Rational(0)));
    const auto chd2 = serre_dual_function(chd0);
    t.expect(chd2.str() == "{x^2 | x <= 0; 0 | x >= 0}", "chd2 " + chd2.str());
    t.expect(serre_dual_function(chd2) == chd0, "involution");
    return t;
  }));

  out.push_back(timed("properties", "HN slopes strictly decrease off walls", [&] {
    std::mt19937_64 rng(opt.seed + 4);
    Tally t;
    for (const auto& s : all_scenarios()) {
      if (!s.tree) continue;
      const ChernClass& v = s.cls;
      const Rational mu = v.v0 != 0 ? Rational(v.v1, v.v0) : Rational(0);
      int done = 0, tries = 0;
      while (done < opt.hn_points && tries < 100 * opt.hn_points) {
        ++tries;
        const Rational a(Integer(uniform(rng, 1, 800)), Integer(200));
        const Rational beta = mu - Rational(Integer(uniform(rng, 1, 400)), Integer(100));
        std::vector<HNFactor> fs;
        try {
          fs = hn_factors_at(*s.tree, a, beta);
        } catch (const std::invalid_argument&) {
          continue;
        }
        ++done;
        bool ok = !fs.empty();
        ChernClass sum;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          sum += fs[i].cls;
          if (i > 0 && !(fs[i].slope < fs[i - 1].slope)) ok = false;
        }
        t.expect(ok && sum == v, s.id + " at (" + a.str() + ", " + beta.str() + ")");
      }
      t.expect(done == opt.hn_points, s.id + " sampled " + std::to_string(done));
    }
    return t;
  }));

  out.push_back(timed("properties", "JSON round trips", [&] {
    std::mt19937_64 rng(opt.seed + 5);
    Tally t;
    for (int i = 0; i < opt.random_classes; ++i) {
      const ChernClass v = random_class(rng, ppas, 400, false);
      t.expect(class_from_json(parse_json_text(to_json(v).dump())) == v, v.str());
    }
    for (const auto& s : all_scenarios()) {
      if (!s.tree) continue;
      t.expect(tree_from_json(parse_json_text(to_json(*s.tree).dump())) == *s.tree, s.id + " tree");
      const auto f = assemble_chd0(*s.tree);
      t.expect(function_from_json(parse_json_text(to_json(f).dump())) == f, s.id + " function");
      for (const auto& w : s.expected_walls) t.expect(wall_from_json(parse_json_text(to_json(w.wall).dump())) == w.wall, s.id + " wall");
    }
    return t;
  }));

  out.push_back(timed("properties", "threaded enumeration matches serial", [&] {
    std::mt19937_64 rng(opt.seed + 6);
    Tally t;
    for (int i = 0; i < 40; ++i) {
      const ChernClass v = random_class(rng, ppas, 60, false);
      const Rational beta = random_beta(rng, v);
      const auto a = enumerate_candidates(v, beta, enum_options(q("1/100"), 1), ppas);
      const auto b = enumerate_candidates(v, beta, enum_options(q("1/100"), 4), ppas);
      bool same = a.size() == b.size();
      for (std::size_t k = 0; same && k < a.size(); ++k) {
        same = a[k].wall == b[k].wall && a[k].witnesses == b[k].witnesses && a[k].cross_a == b[k].cross_a;
      }
      t.expect(same, v.str() + " at " + beta.str());
    }
    return t;
  }));
  return out;
}

std::vector<ScaleQuery> scale_probe_queries(const SurfaceConfig& cfg, long max_delta, long max_v0) {
  std::vector<ScaleQuery> out;
  const Rational half(1, 2);
  for (long v0 = 0; v0 <= max_v0; ++v0) {
    if (v0 == 0) {
      for (long v1 = 1; v1 * v1 <= max_delta; ++v1) {
        for (long v2 = 0; v2 < v1; ++v2) {
          const ChernClass v(0, v1, Rational(v2));
          if (lattice_violation(v, cfg)) continue;
          out.push_back({v, Rational(v2, v1) - half});
        }
      }
      continue;
    }
    for (long v1 = 0; v1 < v0; ++v1) {
      // Delta = v1^2 - 2 v0 v2 in [0, max_delta]
      for (long v2 = -(max_delta / (2 * v0)) - v1; 2 * v0 * v2 <= v1 * v1; ++v2) {
        const ChernClass v(v0, v1, Rational(v2));
        const Rational delta = discriminant(v);
        if (delta.sign() < 0 || delta > Rational(max_delta) || lattice_violation(v, cfg)) continue;
        const Rational mu(v1, v0);
        out.push_back({v, mu - half});
        out.push_back({v, mu - Rational(2)});
      }
    }
  }
  return out;
}

ScaleProbe run_scale_probe(const std::vector<ScaleQuery>& queries, const Rational& a_min,
                           const SurfaceConfig& cfg, unsigned threads) {
  ScaleProbe p;
  p.queries = queries.size();
  p.threads = threads;
  auto sweep = [&](unsigned n, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<WallCandidate>> all;
    for (const auto& q : queries) all.push_back(enumerate_candidates(q.cls, q.beta, enum_options(a_min, n), cfg));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return all;
  };
  const auto serial = sweep(1, p.serial_seconds);
  const auto parallel = sweep(threads, p.parallel_seconds);
  for (const auto& c : serial) p.walls += c.size();
  p.identical = serial == parallel;
  return p;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
  auto out = run_regression_checks();
  auto props = run_property_checks(options);
  out.insert(out.end(), props.begin(), props.end());
  return out;
}

std::string render_check_matrix(const std::vector<CheckResult>& results) {
  std::vector<std::vector<std::string>> rows;
  int passed = 0;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    rows.push_back({r.suite, r.name, r.passed ? "PASS" : "FAIL", secs, r.detail});
    passed += r.passed;
  }
  std::ostringstream os;
  os << render_table({"suite", "check", "result", "time", "detail"}, rows);
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace tiltwall
