#pragma once

#include <vector>

#include "asymlat/point.hpp"

namespace asymlat {

// A polyhedral lattice norm on R^2. The weighted variants are kept as their
// own kinds so evaluation stays a two-term formula; the general case is a
// symmetric convex polygon evaluated through its gauge functional.
struct LatticeNorm2 {
  enum class Kind { WeightedL1, WeightedLinf, Polygonal };

  Kind kind;
  Rational w1;                     // weighted variants only
  Rational w2;
  std::vector<Point2> unit_ball;   // Polygonal only, CCW convex position
};

// Weights must be strictly positive.
LatticeNorm2 make_weighted_l1(const Rational& w1, const Rational& w2);
LatticeNorm2 make_weighted_linf(const Rational& w1, const Rational& w2);

// Checks structural well-formedness only: at least 4 vertices in strictly
// convex position, symmetric under negation, origin strictly interior.
// Solidity is a separate predicate so non-lattice polygons can be probed.
LatticeNorm2 make_polygonal(std::vector<Point2> unit_ball_vertices);

// Norm value, exact. For Polygonal this is the gauge functional of the
// unit ball computed edge by edge.
Rational norm_of(const LatticeNorm2& n, const Point2& v);

// Finite solidity criterion: for every vertex (a,b) of the unit ball, all
// four points (+-|a|, +-|b|) lie in the ball. Equivalent to monotonicity
// of the norm in |x|.
bool solidity_check(const LatticeNorm2& n);

// The asymmetric norm q(x) = ||x v 0|| and its symmetric companion.
// Construction rejects non-solid base norms.
struct AsymNorm2 {
  LatticeNorm2 base;
};

AsymNorm2 make_asym(LatticeNorm2 base);

Rational q_of(const AsymNorm2& n, const Point2& v);
Rational qs_of(const AsymNorm2& n, const Point2& v);

enum class BallKind { Q, QS };

// Open-ball membership: (q or q^s)(z - center) < radius. Radius must be
// strictly positive.
bool ball_contains(const AsymNorm2& n, BallKind kind, const Point2& center,
                   const Rational& radius, const Point2& z);

}  // namespace asymlat
