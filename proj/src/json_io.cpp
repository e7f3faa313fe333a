#include "asymlat/json_io.hpp"

namespace asymlat {

namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& r) { return to_string(r); }

json extended_json(const ExtendedScalar& s) { return to_string(s); }

Rational rational_from(const json& j, const char* field) {
  if (!j.is_string())
    throw ParseError(std::string("field '") + field +
                     "': rational values are strings \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("field '") + field + "': " + e.what());
  }
}

Point2 point_from(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(std::string("field '") + field +
                     "': points are arrays of two rationals");
  return {rational_from(j[0], field), rational_from(j[1], field)};
}

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string("missing field '") + field + "'");
  return j.at(field);
}

std::vector<bool> flags_from(const json& j, const char* field) {
  if (!j.is_array())
    throw ParseError(std::string("field '") + field + "': expected an array");
  std::vector<bool> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_boolean())
      throw ParseError(std::string("field '") + field +
                       "': flags are booleans");
    out.push_back(e.get<bool>());
  }
  return out;
}

}  // namespace

json point_to_json(const Point2& p) {
  return json::array({rational_json(p.x), rational_json(p.y)});
}

json body_to_json(const FlaggedBody2& k) {
  const FlaggedBody2 b = canonicalize(k);
  json verts = json::array();
  for (const Point2& p : b.closure.verts) verts.push_back(point_to_json(p));
  json rays = json::array();
  if (b.closure.ray_in) rays.push_back(point_to_json(*b.closure.ray_in));
  if (b.closure.ray_out) rays.push_back(point_to_json(*b.closure.ray_out));
  json vf = json::array();
  for (bool f : b.vflags) vf.push_back(f);
  json ef = json::array();
  for (bool f : b.eflags) ef.push_back(f);
  return json{{"vertices", verts},
              {"rays", rays},
              {"vertex_flags", vf},
              {"edge_flags", ef}};
}

FlaggedBody2 parse_body(const json& j) {
  const json& jverts = require(j, "vertices");
  const json& jrays = require(j, "rays");
  if (!jverts.is_array() || !jrays.is_array())
    throw ParseError("'vertices' and 'rays' must be arrays");

  ClosedPoly2 c;
  for (const auto& v : jverts) c.verts.push_back(point_from(v, "vertices"));
  if (c.verts.empty()) throw ParseError("a body needs at least one vertex");

  std::vector<Point2> rays;
  for (const auto& r : jrays) rays.push_back(point_from(r, "rays"));
  if (rays.size() > 2) throw ParseError("at most two rays");

  if (rays.size() == 2) {
    c.ray_in = rays[0];
    c.ray_out = rays[1];
  } else if (rays.size() == 1) {
    // A single ray belongs to a one-dimensional chain; the geometry decides
    // which end it extends (serialization puts it at the back).
    c.ray_out = rays[0];
    if (!structure_ok(c)) {
      c.ray_out.reset();
      c.ray_in = rays[0];
    }
  } else if (c.verts.size() >= 3) {
    // No rays: a positive-area vertex loop is a polygon, anything else is
    // a (possibly subdivided) segment chain.
    c.cyclic = true;
    if (!structure_ok(c)) c.cyclic = false;
  }
  if (!structure_ok(c))
    throw ValidationError("structure: not a convex boundary chain");

  FlaggedBody2 k;
  k.closure = c;
  k.vflags = flags_from(require(j, "vertex_flags"), "vertex_flags");
  k.eflags = flags_from(require(j, "edge_flags"), "edge_flags");
  if (k.vflags.size() != c.verts.size())
    throw ParseError("'vertex_flags' length differs from 'vertices'");
  if (k.eflags.size() != c.edge_count())
    throw ParseError("'edge_flags' length differs from the edge count");
  if (!validate(k))
    throw ValidationError(
        "R1: included faces of a collinear chain must form one gap-free "
        "interval, nonempty for dim < 2");
  return k;
}

FlaggedBody2 parse_body_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  return parse_body(j);
}

AsymNorm2 parse_norm(const json& j) {
  const json& t = require(j, "type");
  if (!t.is_string()) throw ParseError("'type' must be a string");
  const std::string type = t.get<std::string>();
  try {
    if (type == "weighted_l1" || type == "weighted_linf") {
      const json& w = require(j, "w");
      if (!w.is_array() || w.size() != 2)
        throw ParseError("'w' must hold two rationals");
      const Rational w1 = rational_from(w[0], "w");
      const Rational w2 = rational_from(w[1], "w");
      return make_asym(type == "weighted_l1" ? make_weighted_l1(w1, w2)
                                             : make_weighted_linf(w1, w2));
    }
    if (type == "polygonal") {
      const json& jv = require(j, "vertices");
      if (!jv.is_array()) throw ParseError("'vertices' must be an array");
      std::vector<Point2> verts;
      for (const auto& v : jv) verts.push_back(point_from(v, "vertices"));
      return make_asym(make_polygonal(std::move(verts)));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  throw ParseError("unknown norm type '" + type + "'");
}

AsymNorm2 parse_norm_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  return parse_norm(j);
}

json extrema_to_json(const Extrema& e) {
  return json{{"u", rational_json(e.u)},
              {"v", rational_json(e.v)},
              {"alpha", rational_json(e.alpha)},
              {"beta", rational_json(e.beta)},
              {"u_attained", e.u_attained},
              {"v_attained", e.v_attained}};
}

json landmarks_to_json(const Landmarks& lm) {
  json arc = json::array();
  for (const Point2& p : lm.f_chain) arc.push_back(point_to_json(p));
  return json{{"delta", body_to_json(lm.delta)},
              {"s", body_to_json(lm.s)},
              {"r", body_to_json(lm.r)},
              {"f_arc", arc},
              {"chord_halfplane",
               json{{"a", rational_json(lm.h_line.a)},
                    {"b", rational_json(lm.h_line.b)},
                    {"c", rational_json(lm.h_line.c)}}}};
}

json decomposition_to_json(const Decomposition& d) {
  if (d.is_case1()) {
    const auto& c1 = std::get<Decomposition::Case1>(d.form);
    return json{{"case", "CASE1"},
                {"apex", point_to_json(c1.apex)},
                {"s0", extended_json(c1.s0)},
                {"t0", extended_json(c1.t0)},
                {"left_end_included", c1.left_end_included},
                {"bottom_end_included", c1.bottom_end_included}};
  }
  const auto& c2 = std::get<Decomposition::Case2>(d.form);
  return json{{"case", "CASE2"},
              {"k0", body_to_json(c2.k0)},
              {"alpha", rational_json(c2.alpha)},
              {"beta", rational_json(c2.beta)},
              {"u", rational_json(c2.u)},
              {"v", rational_json(c2.v)},
              {"s0", extended_json(c2.s0)},
              {"t0", extended_json(c2.t0)},
              {"left_end_included", c2.left_end_included},
              {"bottom_end_included", c2.bottom_end_included}};
}

json witness_to_json(const CoverWitness& w) {
  json out;
  switch (w.family) {
    case CoverWitness::Family::U:
      out["family"] = "U_FAMILY";
      out["anchor"] = point_to_json(w.anchor);
      break;
    case CoverWitness::Family::V:
      out["family"] = "V_FAMILY";
      out["anchor"] = point_to_json(w.anchor);
      break;
    case CoverWitness::Family::Condition:
      out["family"] = "CONDITION";
      out["condition"] = w.condition;
      break;
  }
  out["narrative"] = w.narrative;
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  switch (v.kind) {
    case Verdict::Kind::NotConvexInput:
      out["verdict"] = "NOT_CONVEX_INPUT";
      break;
    case Verdict::Kind::QCompact:
      out["verdict"] = "Q_COMPACT";
      break;
    case Verdict::Kind::NotQCompact:
      out["verdict"] = "NOT_Q_COMPACT";
      break;
  }
  out["reduced_via_saturation"] = v.reduced_via_saturation;
  if (v.decided_body) out["decided_body"] = body_to_json(*v.decided_body);
  if (v.decomposition)
    out["decomposition"] = decomposition_to_json(*v.decomposition);
  if (v.center) out["center"] = body_to_json(*v.center);
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  json checks = json::array();
  for (const CheckRecord& c : v.checks)
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}});
  out["checks"] = checks;
  return out;
}

json cross_check_to_json(const CrossCheckReport& r) {
  json out{{"samples", r.samples}, {"disagreements", r.disagreements}};
  if (r.first_disagreement)
    out["first_disagreement"] = point_to_json(*r.first_disagreement);
  return out;
}

json demo3_to_json(const Demo3Report& r) {
  json samples = json::array();
  for (const Arc3Sample& s : r.samples) {
    samples.push_back(json{
        {"t", rational_json(s.t)},
        {"point", json::array({rational_json(s.a.x1), rational_json(s.a.x2),
                               rational_json(s.a.x3)})},
        {"on_circle", s.on_circle},
        {"forced_point", s.forced_point}});
  }
  return json{{"samples", samples},
              {"limit_param_seen", r.limit_param_seen},
              {"all_on_circle", r.all_on_circle},
              {"all_forced", r.all_forced},
              {"limit_excluded", r.limit_excluded},
              {"notes", r.notes}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace asymlat
