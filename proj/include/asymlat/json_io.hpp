#pragma once

#include <stdexcept>
#include <string>

#include "asymlat/analyzer.hpp"
#include "asymlat/norm.hpp"
#include "asymlat/oracle.hpp"
#include "json.hpp"

namespace asymlat {

// Malformed document: bad JSON, missing field, unparsable rational.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed document describing an illegal object, with the violated
// invariant named in the message.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bodies serialize in canonical form:
//   {"vertices": [["p/q","p/q"], ...], "rays": [["dx","dy"], ...],
//    "vertex_flags": [...], "edge_flags": [...]}
// with edge_flags[i] the edge following vertex i for cyclic polygons, and
// ray edges listed first/last for open chains. parse_body throws
// ParseError / ValidationError and returns only validated bodies.
nlohmann::ordered_json body_to_json(const FlaggedBody2& k);
FlaggedBody2 parse_body(const nlohmann::ordered_json& j);
FlaggedBody2 parse_body_text(const std::string& text);

// {"type":"weighted_l1"|"weighted_linf","w":["p/q","p/q"]} or
// {"type":"polygonal","vertices":[["p/q","p/q"],...]}.
AsymNorm2 parse_norm(const nlohmann::ordered_json& j);
AsymNorm2 parse_norm_text(const std::string& text);

nlohmann::ordered_json point_to_json(const Point2& p);
nlohmann::ordered_json extrema_to_json(const Extrema& e);
nlohmann::ordered_json landmarks_to_json(const Landmarks& lm);
nlohmann::ordered_json decomposition_to_json(const Decomposition& d);
nlohmann::ordered_json witness_to_json(const CoverWitness& w);
nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json cross_check_to_json(const CrossCheckReport& r);
nlohmann::ordered_json demo3_to_json(const Demo3Report& r);

// Deterministic textual form used for every file the tool writes.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace asymlat
