#include "tiltwall/serialize.hpp"

#include <stdexcept>

namespace tiltwall {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("json: " + what); }

// Integers stay JSON numbers while they fit; larger ones become strings.
Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return to_string(n);
}

Integer integer_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail(std::string(what) + " must be an integer");
}

Rational rational_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(std::string(what) + " must be a rational string");
}

QI qi_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return QI(Rational(j.get<long>()));
  if (j.is_string()) return QI::parse(j.get<std::string>());
  fail(std::string(what) + " must be a number string");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Json node_json(const HNNode& n) {
  Json j;
  j["class"] = to_json(n.cls);
  if (n.wall) j["wall"] = to_json(*n.wall);
  if (!n.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : n.children) j["children"].push_back(node_json(c));
  }
  if (!n.label.empty()) j["label"] = n.label;
  return j;
}

HNNode node_from(const Json& j) {
  HNNode n;
  n.cls = class_from_json(member(j, "class"));
  if (j.contains("wall") && !j.at("wall").is_null()) n.wall = wall_from_json(j.at("wall"));
  if (j.contains("children")) {
    if (!j.at("children").is_array()) fail("children must be an array");
    for (const auto& c : j.at("children")) n.children.push_back(node_from(c));
  }
  if (j.contains("label")) n.label = j.at("label").get<std::string>();
  return n;
}

Json leaf_json(const LeafInfo& l) {
  Json j{{"path", l.path}, {"class", to_json(l.cls)}, {"p", l.p.value.str()}, {"double_root", l.p.double_root}};
  if (!l.label.empty()) j["label"] = l.label;
  return j;
}

}  // namespace

Json to_json(const ChernClass& v) { return Json::array({integer_json(v.v0), integer_json(v.v1), v.v2.str()}); }

ChernClass class_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail("class must be [v0, v1, \"v2\"]");
  return {integer_from(j[0], "v0"), integer_from(j[1], "v1"), rational_from(j[2], "v2")};
}

Json to_json(const SurfaceConfig& cfg) {
  return {{"L2", cfg.L2},
          {"v0_step", cfg.v0_step},
          {"v1_step", cfg.v1_step},
          {"v2_denominator", cfg.v2_denominator},
          {"minimal_discriminant", cfg.minimal_discriminant}};
}

SurfaceConfig config_from_json(const Json& j) {
  if (!j.is_object()) fail("config must be an object");
  auto field = [&](const char* key) -> std::int64_t {
    const Json& f = member(j, key);
    if (!f.is_number_integer()) fail(std::string(key) + " must be an integer");
    return f.get<std::int64_t>();
  };
  // Only L2 and minimal_discriminant are required; steps follow with_defaults.
  SurfaceConfig cfg = SurfaceConfig::with_defaults(field("L2"), field("minimal_discriminant"));
  if (j.contains("v0_step")) cfg.v0_step = field("v0_step");
  if (j.contains("v1_step")) cfg.v1_step = field("v1_step");
  if (j.contains("v2_denominator")) cfg.v2_denominator = field("v2_denominator");
  cfg.validate();
  return cfg;
}

Json to_json(const NumericalWall& w) {
  if (w.is_vertical()) return {{"vertical", w.as_vertical().beta.str()}};
  return {{"center", w.as_semicircle().center.str()}, {"radius_sq", w.as_semicircle().radius_sq.str()}};
}

NumericalWall wall_from_json(const Json& j) {
  if (j.is_object() && j.contains("vertical")) return NumericalWall::vertical(rational_from(j.at("vertical"), "vertical"));
  return NumericalWall::semicircle(rational_from(member(j, "center"), "center"),
                                   rational_from(member(j, "radius_sq"), "radius_sq"));
}

Json to_json(const HNTree& t) { return node_json(t.root); }
HNTree tree_from_json(const Json& j) { return {node_from(j)}; }

Json to_json(const PiecewiseQuadratic& f) {
  Json j{{"breakpoints", Json::array()}, {"pieces", Json::array()}};
  for (const auto& b : f.breakpoints) j["breakpoints"].push_back(b.str());
  for (const auto& p : f.pieces) j["pieces"].push_back(Json::array({p.c0.str(), p.c1.str(), p.c2.str()}));
  return j;
}

PiecewiseQuadratic function_from_json(const Json& j) {
  PiecewiseQuadratic f;
  const Json& bs = member(j, "breakpoints");
  const Json& ps = member(j, "pieces");
  if (!bs.is_array() || !ps.is_array()) fail("breakpoints and pieces must be arrays");
  for (const auto& b : bs) f.breakpoints.push_back(qi_from(b, "breakpoint"));
  for (const auto& p : ps) {
    if (!p.is_array() || p.size() != 3) fail("piece must be [c0, c1, c2]");
    f.pieces.push_back({rational_from(p[0], "c0"), rational_from(p[1], "c1"), rational_from(p[2], "c2")});
  }
  f.check_shape();
  return f;
}

Json to_json(const WallCandidate& c) {
  Json j = to_json(c.wall);
  j["cross_a"] = c.cross_a.str();
  j["witness"] = to_json(c.witness);
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(to_json(w));
  return j;
}

WallCandidate candidate_from_json(const Json& j) {
  WallCandidate c{wall_from_json(j), class_from_json(member(j, "witness")), {}, rational_from(member(j, "cross_a"), "cross_a")};
  if (j.contains("witnesses")) {
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(class_from_json(w));
  } else {
    c.witnesses.push_back(c.witness);
  }
  return c;
}

Json to_json(const BreakpointReport& r) {
  Json j{{"x", r.x.str()},
         {"derivative_jump", r.derivative_jump.str()},
         {"differentiable", r.differentiable},
         {"overlap", r.overlap},
         {"leaves", Json::array()},
         {"tags", Json::array()}};
  for (const auto& l : r.contributing_leaves) j["leaves"].push_back(leaf_json(l));
  for (const auto& t : r.tags) {
    j["tags"].push_back({{"conditions", t.conditions}, {"status", to_string(t.status)}, {"reason", t.reason}});
  }
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j{{"ok", r.ok()}, {"violations", Json::array()}};
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"path", v.path}, {"invariant", v.invariant}, {"detail", v.detail}});
  }
  return j;
}

Json to_json(const HNFactor& f) {
  Json j{{"class", to_json(f.cls)}, {"slope", f.slope.str()}};
  if (!f.label.empty()) j["label"] = f.label;
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

}  // namespace tiltwall
