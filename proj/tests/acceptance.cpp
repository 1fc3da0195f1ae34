// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "tiltwall/catalog.hpp"
#include "tiltwall/checks.hpp"

using namespace tiltwall;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
ChernClass cc(long a, long b, const char* c) { return ChernClass(a, b, q(c)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const SurfaceConfig& ppas() {
  static const SurfaceConfig cfg = SurfaceConfig::preset("ppas");
  return cfg;
}

EnumerationOptions at(const char* a_min, unsigned threads = 1) {
  EnumerationOptions o;
  o.a_min = q(a_min);
  o.threads = threads;
  return o;
}

std::vector<WallCandidate> walls5() { return enumerate_candidates(cc(2, 0, "-5"), Rational(-2), at("1/100"), ppas()); }
std::vector<WallCandidate> walls4() { return enumerate_candidates(cc(2, 0, "-4"), Rational(-2), at("1/100"), ppas()); }
std::vector<WallCandidate> walls3() { return enumerate_candidates(cc(2, 0, "-3"), q("-7/4"), at("1/100"), ppas()); }

Outcome criterion1() {
  Outcome o;
  const auto want = NumericalWall::semicircle(q("-3/2"), q("1/4"));
  const auto a = wall_between(cc(2, 0, "-2"), cc(4, -4, "2"));
  const auto b = wall_between(cc(2, 0, "-2"), cc(2, -2, "1"));
  o.expect(a && *a == want, "wall with (4,-4,2) is " + (a ? a->str() : std::string("none")));
  o.expect(b && *b == want, "wall with (2,-2,1) is " + (b ? b->str() : std::string("none")));
  o.expect(a && b && *a == *b, "decompositions disagree");
  if (o.ok) o.detail = "both decompositions give " + want.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto c4 = walls4();
  o.expect(c4.size() == 1 && c4[0].wall == NumericalWall::semicircle(q("-5/2"), q("9/4")),
           "(2,0,-4): " + std::to_string(c4.size()) + " walls");
  const auto c5 = walls5();
  const char* want[3][3] = {{"-3", "4", "3/2"}, {"-5/2", "5/4", "1/2"}, {"-7/3", "4/9", "1/6"}};
  o.expect(c5.size() == 3, "(2,0,-5): " + std::to_string(c5.size()) + " walls");
  for (std::size_t i = 0; i < 3 && i < c5.size(); ++i) {
    o.expect(c5[i].wall == NumericalWall::semicircle(q(want[i][0]), q(want[i][1])) && c5[i].cross_a == q(want[i][2]),
             "(2,0,-5) row " + std::to_string(i + 1) + " is " + c5[i].wall.str());
  }
  const auto c3 = walls3();
  o.expect(std::any_of(c3.begin(), c3.end(),
                       [](const auto& c) { return c.wall == NumericalWall::semicircle(q("-7/4"), q("1/16")); }),
           "(2,0,-3): wall (-7/4, 1/16) missing");
  if (o.ok) o.detail = "n=4: 1 wall, n=5: 3 walls in order, n=3: (-7/4, 1/16) present";
  return o;
}

Outcome criterion3(const CheckResult& rigid) {
  Outcome o;
  // Delta = 0 classes occurring in the catalog: roots and leaves.
  std::vector<ChernClass> rigid_classes;
  for (const auto& s : all_scenarios()) {
    if (discriminant(s.cls).is_zero()) rigid_classes.push_back(s.cls);
    if (!s.tree) continue;
    for (const auto& leaf : tree_leaves(*s.tree)) {
      if (discriminant(leaf.cls).is_zero() && leaf.cls.v0 != 0) rigid_classes.push_back(leaf.cls);
    }
  }
  int queries = 0;
  for (const auto& v : rigid_classes) {
    const Rational mu(v.v1, v.v0);
    for (const char* off : {"1/8", "1/2", "1", "3", "17/2"}) {
      const Rational beta = v.v0 > 0 ? mu - q(off) : mu + q(off);
      for (const char* a_min : {"1/100", "1/1000"}) {
        ++queries;
        o.expect(enumerate_candidates(v, beta, at(a_min), ppas()).empty(), v.str() + " at beta " + beta.str());
      }
    }
  }
  o.expect(!rigid_classes.empty(), "no Delta = 0 catalog classes found");
  o.expect(rigid.passed, "random rigid classes: " + rigid.detail);
  if (o.ok) {
    o.detail = std::to_string(rigid_classes.size()) + " catalog classes x " +
               std::to_string(queries / std::max<std::size_t>(1, rigid_classes.size())) +
               " segments empty; random: " + rigid.detail;
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  int scenarios = 0, breakpoints = 0;
  for (const auto& s : all_scenarios()) {
    if (!s.tree) continue;
    ++scenarios;
    const auto f = assemble_chd0(*s.tree);
    o.expect(s.expected_chd0 && f == *s.expected_chd0, s.id + ": chd0 is " + f.str());
    o.expect(f.is_continuous(), s.id + ": discontinuous");
    breakpoints += static_cast<int>(f.breakpoints.size());
  }
  const auto f = trivial_chd(cc(2, 0, "-2"));
  o.expect(f.breakpoints.size() == 1 && f.breakpoints[0] == QuadraticIrrational::sqrt(Rational(2)),
           "(2,0,-2): breakpoints " + f.str());
  o.expect(f.is_continuous(), "(2,0,-2): discontinuous");
  if (o.ok) {
    o.detail = std::to_string(scenarios) + " tree scenarios match exactly, " + std::to_string(breakpoints) +
               " breakpoints continuous; trivial (2,0,-2) breaks at sqrt(2)";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  struct Want {
    const char* id;
    const char* x;  // breakpoint with a nonzero jump, or nullptr
    bool overlap;
  };
  const Want wants[] = {{"ppas-ideal-2", nullptr, false},
                        {"ppas-ideal-4-collinear", nullptr, false},
                        {"abelian12-ideal-point", nullptr, false},
                        {"ppas-ideal-3-collinear", "2", false},
                        {"ppas-ideal-5-W2", "2", true}};
  for (const auto& w : wants) {
    const Scenario& s = load_scenario(w.id);
    const auto f = assemble_chd0(*s.tree);
    const auto reps = classify_breakpoints(*s.tree);
    o.expect(reps.size() == f.breakpoints.size(), std::string(w.id) + ": report count");
    for (std::size_t i = 0; i < reps.size() && i < f.breakpoints.size(); ++i) {
      const auto& r = reps[i];
      const bool special = w.x && r.x == QuadraticIrrational(q(w.x));
      const auto want_jump = special ? QuadraticIrrational(Rational(2)) : QuadraticIrrational(Rational(0));
      o.expect(r.derivative_jump == want_jump, std::string(w.id) + ": jump at " + r.x.str() + " is " +
                                                   r.derivative_jump.str());
      o.expect(!special || r.overlap == w.overlap, std::string(w.id) + ": overlap flag at " + r.x.str());
      QuadraticIrrational symbolic(Rational(0));
      for (const auto& leaf : r.contributing_leaves) symbolic += QuadraticIrrational::sqrt(discriminant(leaf.cls));
      o.expect(symbolic == r.derivative_jump, std::string(w.id) + ": sum of sqrt(Delta) at " + r.x.str());
      o.expect(f.right_derivative(i) - f.left_derivative(i) == r.derivative_jump,
               std::string(w.id) + ": piece derivatives at " + r.x.str());
    }
  }
  if (o.ok) o.detail = "C1 at n=2, n=4-collinear, (1,2); jump 2 at x=2 for n=3-collinear and n=5-W2 (overlap)";
  return o;
}

Outcome from_rows(const std::vector<CheckResult>& rows, const std::vector<std::string>& names) {
  Outcome o;
  std::ostringstream detail;
  for (const auto& n : names) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.name == n; });
    o.expect(it != rows.end(), "missing check " + n);
    if (it == rows.end()) continue;
    o.expect(it->passed, n + ": " + it->detail);
    detail << (detail.tellp() ? "; " : "") << n << " (" << it->detail << ")";
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

Outcome criterion7(const std::vector<CheckResult>& rows, double seconds) {
  Outcome o;
  const ChernClass v5 = cc(2, 0, "-5"), v4 = cc(2, 0, "-4"), v3 = cc(2, 0, "-3");
  int confirmed = 0, rejected = 0;
  auto probe = [&](const ChernClass& v, const std::vector<WallCandidate>& cands) {
    for (const auto& c : cands) {
      const bool yes = slope_crossing_oracle(v, c.witness, c.wall, q("1/64"));
      o.expect(yes, v.str() + ": oracle rejects " + c.wall.str());
      confirmed += yes;
      const auto& s = c.wall.as_semicircle();
      for (const auto& moved : {NumericalWall::semicircle(s.center + q("1/32"), s.radius_sq),
                                NumericalWall::semicircle(s.center, s.radius_sq + q("1/16"))}) {
        const bool no = !slope_crossing_oracle(v, c.witness, moved, q("1/64"));
        o.expect(no, v.str() + ": oracle accepts perturbed " + moved.str());
        rejected += no;
      }
    }
  };
  probe(v4, walls4());
  probe(v5, walls5());
  probe(v3, walls3());
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
  o.expect(all_pass, "check suite has failures");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", seconds);
  o.expect(seconds < 30, std::string("check suite took ") + buf);
  if (o.ok) {
    o.detail = std::to_string(confirmed) + " walls confirmed, " + std::to_string(rejected) +
               " perturbations rejected at step 1/64; full check suite (" + std::to_string(rows.size()) +
               " checks) in " + buf;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const unsigned threads = std::max(4u, std::thread::hardware_concurrency());
  const auto queries = scale_probe_queries(ppas(), 100, 20);
  const auto p = run_scale_probe(queries, q("1/100"), ppas(), threads);
  o.expect(p.identical, "threaded output differs from serial");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu queries, %zu walls; 1 thread %.2f s, %u threads %.2f s", p.queries, p.walls,
                p.serial_seconds, p.threads, p.parallel_seconds);
  o.expect(p.serial_seconds < 10 && p.parallel_seconds < 10, buf);
  o.expect(p.queries > 0, "empty probe");
  if (o.ok) o.detail = std::string(buf) + ", identical";
  return o;
}

}  // namespace

int main() {
  CheckOptions opt;
  opt.threads = std::max(2u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_all_checks(opt);
  const double suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto rigid = std::find_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.name == "Delta = 0 classes have no walls";
  });

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"wall exactness", criterion1},
      {"enumeration completeness", criterion2},
      {"Delta = 0 rigidity",
       [&] { return criterion3(rigid != rows.end() ? *rigid : CheckResult{"", "", false, "missing", 0}); }},
      {"function regressions", criterion4},
      {"critical-point law", criterion5},
      {"identity suites",
       [&] {
         return from_rows(rows, {"function identities on random trees", "Serre duality on the structure sheaf",
                                 "discriminant is twist invariant", "wall top points on H_v; same-side walls nested",
                                 "HN slopes strictly decrease off walls"});
       }},
      {"oracle cross-check", [&] { return criterion7(rows, suite_seconds); }},
      {"scale probe", criterion8},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
