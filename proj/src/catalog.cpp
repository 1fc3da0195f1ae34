#include "tiltwall/catalog.hpp"

#include <array>
#include <stdexcept>

namespace tiltwall {

namespace {

Rational q(const char* s) { return Rational::parse(s); }
ChernClass cc(long a, long b, const char* c) { return {a, b, q(c)}; }

HNNode leaf(ChernClass v, std::string label = {}) { return {std::move(v), std::nullopt, {}, std::move(label)}; }

HNNode split(ChernClass v, const char* center, const char* radius_sq, std::vector<HNNode> children,
             std::string label = {}) {
  return {std::move(v), NumericalWall::semicircle(q(center), q(radius_sq)), std::move(children), std::move(label)};
}

// Pieces listed as {c0, c1, c2}.
PiecewiseQuadratic fn(std::vector<QI> breaks, std::vector<std::array<long, 3>> pieces) {
  PiecewiseQuadratic f;
  f.breakpoints = std::move(breaks);
  for (const auto& p : pieces) f.pieces.push_back({Rational(p[0]), Rational(p[1]), Rational(p[2])});
  f.check_shape();
  return f;
}

ExpectedWall wall(ChernClass v, const char* center, const char* radius_sq, const char* beta) {
  return {std::move(v), NumericalWall::semicircle(q(center), q(radius_sq)), q(beta)};
}

ExpectedBreakpoint bp(QI x, long jump, bool overlap = false) { return {std::move(x), QI(Rational(jump)), overlap}; }

Scenario base(std::string id, const char* preset, ChernClass v, std::string notes) {
  Scenario s;
  s.id = std::move(id);
  s.preset = preset;
  s.config = SurfaceConfig::preset(preset);
  s.cls = std::move(v);
  s.notes = std::move(notes);
  return s;
}

Scenario trivial(std::string id, const char* preset, ChernClass v, PiecewiseQuadratic f, QI x, long jump,
                 std::string notes) {
  Scenario s = base(std::move(id), preset, v, std::move(notes));
  s.tree = HNTree::trivial(v);
  s.trivial = true;
  s.expected_chd0 = std::move(f);
  s.expected_breakpoints = {bp(std::move(x), jump)};
  return s;
}

// Quotient O_C(-D) by a degree 4 divisor on a theta translate, split by two
// line bundles of vanishing discriminant.
HNNode collinear_quotient() {
  return split(cc(0, 2, "-5"), "-5/2", "1/4", {leaf(cc(2, -4, "4"), "Q1"), leaf(cc(-2, 6, "-9"), "Q2")}, "Q");
}

std::vector<Scenario> build() {
  std::vector<Scenario> out;

  out.push_back(trivial("ppas-ideal-1", "ppas", cc(2, 0, "-1"), fn({QI(1)}, {{0, 0, 0}, {-1, 0, 1}}), QI(1), 2,
                        "Ideal sheaf of a point: no wall for beta < 0, trivial function with breakpoint 1."));

  {
    Scenario s = base("ppas-ideal-2", "ppas", cc(2, 0, "-2"),
                      "Ideal sheaf of two points. The first wall (center -3/2, radius 1/2) is witnessed by both "
                      "(2,-2,1) and (4,-4,2); the HN filtration below it is E=(4,-4,2) -> I_T -> (-2,4,-4), a "
                      "semihomogeneous rank 2 bundle and a shifted line bundle, both of discriminant 0.");
    s.tree = HNTree{split(cc(2, 0, "-2"), "-3/2", "1/4", {leaf(cc(4, -4, "2"), "E"), leaf(cc(-2, 4, "-4"), "Q")})};
    s.expected_chd0 = fn({QI(1), QI(2)}, {{0, 0, 0}, {2, -4, 2}, {-2, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-2"), "-3/2", "1/4", "-3/2")};
    s.expected_breakpoints = {bp(QI(1), 0), bp(QI(2), 0)};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-3-collinear", "ppas", cc(2, 0, "-3"),
                      "Three points on a theta translate C1: L^-1 -> I_T -> O_C1(-T). The quotient is a line "
                      "bundle of odd degree on an Abel-Jacobi curve, hence semistable everywhere; its class is "
                      "(0,2,deg-1) = (0,2,-4) from chi = deg + 1 - g. The wall (center -2, radius 1) is computed "
                      "from the sequence.");
    s.tree = HNTree{split(cc(2, 0, "-3"), "-2", "1", {leaf(cc(2, -2, "1"), "E"), leaf(cc(0, 2, "-4"), "Q")})};
    s.expected_chd0 = fn({QI(1), QI(2)}, {{0, 0, 0}, {1, -2, 1}, {-3, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-3"), "-2", "1", "-2")};
    s.expected_breakpoints = {bp(QI(1), 0), bp(QI(2), 2)};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-3-generic", "ppas", cc(2, 0, "-3"),
                      "Three non-collinear points: stable along beta = -2, destabilized along the wall of "
                      "center -7/4 and radius 1/4 by E with ch = (4,-6L,9), i.e. v = (8,-12,9), with quotient "
                      "(-6,12,-12); both have discriminant 0.");
    s.tree = HNTree{split(cc(2, 0, "-3"), "-7/4", "1/16", {leaf(cc(8, -12, "9"), "E"), leaf(cc(-6, 12, "-12"), "Q")})};
    s.expected_chd0 = fn({QI(q("3/2")), QI(2)}, {{0, 0, 0}, {9, -12, 4}, {-3, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-3"), "-7/4", "1/16", "-7/4")};
    s.expected_breakpoints = {bp(QI(q("3/2")), 0), bp(QI(2), 0)};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-4-collinear", "ppas", cc(2, 0, "-4"),
                      "Four points on a theta translate C1. Unique wall W (center -5/2, radius 3/2): "
                      "E = L^-1 -> I_T -> Q = O_C1(-D), Q = (0,2,-5) from chi = deg + 1 - g with deg D = 4. "
                      "Q splits along W_Q (center -5/2, radius 1/2) into L^-2 = (2,-4,4) and L^-3[1] = (-2,6,-9).");
    s.tree = HNTree{split(cc(2, 0, "-4"), "-5/2", "9/4", {leaf(cc(2, -2, "1"), "E"), collinear_quotient()})};
    s.expected_chd0 = fn({QI(1), QI(2), QI(3)}, {{0, 0, 0}, {1, -2, 1}, {5, -6, 2}, {-4, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-4"), "-5/2", "9/4", "-2"), wall(cc(0, 2, "-5"), "-5/2", "1/4", "-5/2")};
    s.expected_breakpoints = {bp(QI(1), 0), bp(QI(2), 0), bp(QI(3), 0)};
    out.push_back(std::move(s));
  }
  out.push_back(trivial("ppas-ideal-4-generic", "ppas", cc(2, 0, "-4"), fn({QI(2)}, {{0, 0, 0}, {-4, 0, 1}}), QI(2),
                        4,
                        "Four points not on a theta translate: semistable along beta = -2 = p, hence on all of "
                        "beta < 0; trivial function."));
  {
    Scenario s = base("ppas-ideal-5-W2", "ppas", cc(2, 0, "-5"),
                      "Five points, four of them on a theta translate C1. Wall W2 (center -5/2, radius sqrt(5)/2): "
                      "E = I_p5 (x) L^-1 = (2,-2,0) -> I_T -> Q = O_C1(-D) = (0,2,-5); Q splits along W_Q as in "
                      "the collinear four point case. p_E = p_Q1 = -2, so x = 2 is a breakpoint shared by two "
                      "leaves.");
    s.tree = HNTree{split(cc(2, 0, "-5"), "-5/2", "5/4", {leaf(cc(2, -2, "0"), "E"), collinear_quotient()})};
    s.expected_chd0 = fn({QI(2), QI(3)}, {{0, 0, 0}, {4, -6, 2}, {-5, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-5"), "-5/2", "5/4", "-2"), wall(cc(0, 2, "-5"), "-5/2", "1/4", "-5/2")};
    s.expected_breakpoints = {bp(QI(2), 2, true), bp(QI(3), 0)};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-5-generic", "ppas", cc(2, 0, "-5"),
                      "Five points in general position: five curves of |L^2 (x) alpha| contain T and "
                      "destabilize along the wall of center -9/4 and radius 1/4 into (10,-20,20) and "
                      "(-8,20,-25), both of discriminant 0.");
    s.tree =
        HNTree{split(cc(2, 0, "-5"), "-9/4", "1/16", {leaf(cc(10, -20, "20"), "E"), leaf(cc(-8, 20, "-25"), "Q")})};
    s.expected_chd0 = fn({QI(2), QI(q("5/2"))}, {{0, 0, 0}, {20, -20, 5}, {-5, 0, 1}});
    s.expected_walls = {wall(cc(2, 0, "-5"), "-9/4", "1/16", "-9/4")};
    s.expected_breakpoints = {bp(QI(2), 0), bp(QI(q("5/2")), 0)};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-5-W1-walls", "ppas", cc(2, 0, "-5"),
                      "Five collinear points: wall W1 of center -3 and radius 2, destabilized by L^-1 = (2,-2,1). "
                      "The full function is not recorded.");
    s.expected_walls = {wall(cc(2, 0, "-5"), "-3", "4", "-2")};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("ppas-ideal-5-W3-walls", "ppas", cc(2, 0, "-5"),
                      "Every length 4 subscheme non-collinear with a unique collinear length 3 subscheme: wall W3 "
                      "of center -7/3 and radius 2/3, destabilized by a stable bundle K with ch = (2,-3L,4), "
                      "i.e. v = (4,-6,4). The full function is not recorded.");
    s.expected_walls = {wall(cc(2, 0, "-5"), "-7/3", "4/9", "-2")};
    out.push_back(std::move(s));
  }
  {
    Scenario s = base("abelian12-ideal-point", "abelian-(1,2)", cc(4, 0, "-1"),
                      "Ideal of a point on a (1,2)-polarized abelian surface (L^2 = 4, m = 8). The base points "
                      "of |L| give a non-trivial extension L^-1 -> E -> I_p with v(E) = (8,-4,1); rotating it "
                      "yields the wall (center -3/4, radius 1/4) with quotient L^-1[1] = (-4,4,-2).");
    s.tree = HNTree{split(cc(4, 0, "-1"), "-3/4", "1/16", {leaf(cc(8, -4, "1"), "E"), leaf(cc(-4, 4, "-2"), "Q")})};
    s.expected_chd0 = fn({QI(q("1/2")), QI(1)}, {{0, 0, 0}, {1, -4, 4}, {-1, 0, 2}});
    s.expected_walls = {wall(cc(4, 0, "-1"), "-3/4", "1/16", "-3/4")};
    s.expected_breakpoints = {bp(QI(q("1/2")), 0), bp(QI(1), 0)};
    out.push_back(std::move(s));
  }
  out.push_back(trivial("ppas-structure-sheaf", "ppas", cc(2, 0, "0"), fn({QI(0)}, {{0, 0, 0}, {0, 0, 1}}), QI(0), 0,
                        "Structure sheaf: chd0 = (L^2/2) x^2 for x >= 0; its Serre dual is chd2."));
  out.push_back(trivial("ppas-abel-jacobi", "ppas", cc(0, 2, "0"), fn({QI(0)}, {{0, 0, 0}, {0, 2, 0}}), QI(0), 2,
                        "i_*M for a degree 1 line bundle M on an Abel-Jacobi curve: semistable on the whole plane; "
                        "v = (0,2,deg M - 1) from chi = deg M + 1 - g."));
  return out;
}

}  // namespace

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> scenarios = build();
  return scenarios;
}

std::vector<std::string> list_scenarios() {
  std::vector<std::string> ids;
  for (const auto& s : all_scenarios()) ids.push_back(s.id);
  return ids;
}

const Scenario& load_scenario(std::string_view id) {
  for (const auto& s : all_scenarios()) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(id) + "'");
}

Json export_scenario(const Scenario& s) {
  Json j{{"id", s.id}, {"preset", s.preset}, {"config", to_json(s.config)}, {"class", to_json(s.cls)},
         {"trivial", s.trivial}, {"notes", s.notes}};
  j["tree"] = s.tree ? to_json(*s.tree) : Json(nullptr);
  j["expected_chd0"] = s.expected_chd0 ? to_json(*s.expected_chd0) : Json(nullptr);
  j["expected_walls"] = Json::array();
  for (const auto& w : s.expected_walls) {
    Json e = to_json(w.wall);
    e["class"] = to_json(w.cls);
    e["beta"] = w.beta.str();
    j["expected_walls"].push_back(e);
  }
  j["expected_breakpoints"] = Json::array();
  for (const auto& b : s.expected_breakpoints) {
    j["expected_breakpoints"].push_back({{"x", b.x.str()}, {"jump", b.jump.str()}, {"overlap", b.overlap}});
  }
  return j;
}

}  // namespace tiltwall
