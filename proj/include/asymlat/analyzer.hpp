#pragma once

#include <string>
#include <variant>
#include <vector>

#include "asymlat/body.hpp"

namespace asymlat {

// Coordinate suprema over the closure and the suprema along the extreme
// lines x = u and y = v. Finite whenever the recession cone lies in
// theta_0.
struct Extrema {
  Rational u;
  Rational v;
  Rational alpha;  // sup { x : (x, v) in closure }
  Rational beta;   // sup { y : (u, y) in closure }
  bool u_attained;  // some included face realizes x = u
  bool v_attained;

  Point2 corner_left() const { return {alpha, v}; }
  Point2 corner_right() const { return {u, beta}; }
};

// The derived sets of the decomposition: the corner triangle, the
// upper-right part S, the part R above the corner chord, and the boundary
// arc F of closure(R) between the corners on the chord's upper side.
struct Landmarks {
  FlaggedBody2 delta;
  FlaggedBody2 s;
  FlaggedBody2 r;
  std::vector<Point2> f_chain;  // vertices of the arc, corner to corner
  HalfPlane h_line;             // the closed half-plane above the chord
};

// Certificate of q-compactness. Case 1 is the single-corner form (alpha =
// u): two half-open segments hanging from the apex plus the open cone.
// Case 2 carries a fully closed bounded core between the corner triangle
// and the corner quadrilateral.
struct Decomposition {
  struct Case1 {
    Point2 apex;  // (u, v)
    ExtendedScalar s0;
    ExtendedScalar t0;
    bool left_end_included;    // (s0, v) itself, when s0 finite
    bool bottom_end_included;  // (u, t0) itself, when t0 finite
  };
  struct Case2 {
    FlaggedBody2 k0;
    Rational alpha, beta, u, v;
    ExtendedScalar s0;
    ExtendedScalar t0;
    bool left_end_included;
    bool bottom_end_included;
  };
  std::variant<Case1, Case2> form;

  bool is_case1() const { return form.index() == 0; }
};

// No-finite-subcover certificate data. U-family covers are
// U_t = (-inf, anchor.x - t) x R, V-family the transpose; CONDITION names
// a violated structural check instead.
struct CoverWitness {
  enum class Family { U, V, Condition };
  Family family;
  Point2 anchor{};
  std::string condition;  // Family::Condition only
  std::string narrative;
};

struct CheckRecord {
  std::string name;
  bool passed;
};

struct Verdict {
  enum class Kind { NotConvexInput, QCompact, NotQCompact };
  Kind kind;
  std::optional<Decomposition> decomposition;  // QCompact
  std::optional<FlaggedBody2> center;          // QCompact
  std::optional<CoverWitness> witness;         // NotQCompact
  bool reduced_via_saturation = false;
  std::optional<FlaggedBody2> decided_body;    // saturate(K) when reduced
  std::vector<CheckRecord> checks;
};

// Throws std::domain_error when the recession cone escapes theta_0 (the
// supremum would be infinite).
Extrema compute_extrema(const FlaggedBody2& k);

Landmarks compute_landmarks(const FlaggedBody2& k, const Extrema& e);

Verdict decide(const FlaggedBody2& k);

// Realizes a certificate as a flagged body. Throws std::invalid_argument
// when the certificate violates its invariants.
FlaggedBody2 assemble(const Decomposition& d);

// The strongly-compact center (R of the input, fully closed). Throws
// std::logic_error unless decide(k) is QCompact.
FlaggedBody2 center(const FlaggedBody2& k);

}  // namespace asymlat
