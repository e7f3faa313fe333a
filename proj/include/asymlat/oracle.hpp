#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymlat/analyzer.hpp"

namespace asymlat {

// Verification paths deliberately separate from the analyzer: each
// implements one individually provable necessary condition, so the two
// code bases can be compared check by check.

// Does the coordinate projection of the set contain its supremum? Throws
// std::domain_error when the projection is unbounded above.
bool proj_sup_check(const FlaggedBody2& k, int axis);

// Every face of the arc F (vertices and open edges, corners included)
// belongs to the set.
bool f_arc_check(const FlaggedBody2& k, const Landmarks& lm);

// The hull of the two corner rays L1 = {(alpha,y): y <= v} and
// L2 = {(x,beta): x <= u} is contained in the set. Vacuously true when the
// corners coincide.
bool cone_hull_check(const FlaggedBody2& k, const Extrema& e);

struct WitnessInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Constructive no-finite-subcover certificate: a point of k that no set of
// the finite subfamily {U_t : t in ts} (resp. V_t) covers. The returned
// point has x >= anchor.x - min(ts)/2 for the U family (y for V). Throws
// WitnessInvalid when the witness is wrong (anchor in k, or no such point).
Point2 uncovered_point(const CoverWitness& w, const FlaggedBody2& k,
                       const std::vector<Rational>& ts);

struct CrossCheckReport {
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  std::optional<Point2> first_disagreement;
};

// Samples n rational points, half of them within 1/16 of boundary faces,
// and compares membership in k against membership in assemble(d).
CrossCheckReport cross_check(const FlaggedBody2& k, const Decomposition& d,
                             std::size_t n, std::uint64_t seed);

// One sampled point of the circular arc A of the three-dimensional
// counterexample, with its exact support-functional certificate.
struct Arc3Sample {
  Rational t;
  Point3 a;                 // (a1, 0, a3) with a1^2 + a3^2 = 1
  bool on_circle;           // (a)
  bool forced_point;        // (b): <g, a> <= 1 for all generators, = only at a
};

struct Demo3Report {
  std::vector<Arc3Sample> samples;
  bool limit_param_seen = false;  // t = 1 used as the limit only
  bool all_on_circle = false;
  bool all_forced = false;
  bool limit_excluded = false;    // (c): <g,(0,-1,1)> < 1 for every generator
  std::vector<std::string> notes;
};

// The counterexample in dimension 3: K = co(A + {origin, (0,1,1)}) with
// q(x) = max_i max{x_i, 0}. Every sampled arc point is forced into any
// center, yet their limit (0,0,1) is not in K, so no compact center
// exists. Parameters must lie in (0,1]; at least 10 arc samples required.
Demo3Report demo_3d(const std::vector<Rational>& params);

}  // namespace asymlat
