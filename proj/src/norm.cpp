#include "asymlat/norm.hpp"

#include <algorithm>
#include <stdexcept>

namespace asymlat {

namespace {

Rational rabs(const Rational& r) { return r < 0 ? -r : r; }

void check_weights(const Rational& w1, const Rational& w2) {
  if (w1 <= 0 || w2 <= 0)
    throw std::invalid_argument("norm weights must be strictly positive");
}

// Gauge of the polygon: max over edges of the linear functional that is 1
// on the edge line and 0 at the origin.
Rational polygon_gauge(const std::vector<Point2>& ball, const Point2& z) {
  Rational best(0);
  const std::size_t n = ball.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = ball[i];
    const Point2& q = ball[(i + 1) % n];
    const Rational c = cross(p, q);  // > 0: CCW, origin interior
    const Rational f = cross(q - p, z) / -c;
    if (f > best) best = f;
  }
  return best;
}

}  // namespace

LatticeNorm2 make_weighted_l1(const Rational& w1, const Rational& w2) {
  check_weights(w1, w2);
  return {LatticeNorm2::Kind::WeightedL1, w1, w2, {}};
}

LatticeNorm2 make_weighted_linf(const Rational& w1, const Rational& w2) {
  check_weights(w1, w2);
  return {LatticeNorm2::Kind::WeightedLinf, w1, w2, {}};
}

LatticeNorm2 make_polygonal(std::vector<Point2> verts) {
  if (verts.size() < 4 || verts.size() % 2 != 0)
    throw std::invalid_argument("polygonal ball needs an even count >= 4");

  // Normalize to CCW.
  Rational area2(0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    area2 += cross(verts[i], verts[(i + 1) % verts.size()]);
  if (area2 < 0) std::reverse(verts.begin(), verts.end());

  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = verts[i];
    const Point2& q = verts[(i + 1) % n];
    if (orient(p, q, verts[(i + 2) % n]) <= 0)
      throw std::invalid_argument("ball vertices not in strict convex position");
    if (cross(p, q) <= 0)
      throw std::invalid_argument("origin not strictly interior to the ball");
  }
  // Central symmetry: opposite vertex must be the negation.
  for (std::size_t i = 0; i < n; ++i)
    if (verts[(i + n / 2) % n] != -verts[i])
      throw std::invalid_argument("ball polygon not symmetric under negation");

  return {LatticeNorm2::Kind::Polygonal, Rational(0), Rational(0),
          std::move(verts)};
}

Rational norm_of(const LatticeNorm2& n, const Point2& v) {
  switch (n.kind) {
    case LatticeNorm2::Kind::WeightedL1:
      return n.w1 * rabs(v.x) + n.w2 * rabs(v.y);
    case LatticeNorm2::Kind::WeightedLinf: {
      const Rational a = n.w1 * rabs(v.x);
      const Rational b = n.w2 * rabs(v.y);
      return a > b ? a : b;
    }
    case LatticeNorm2::Kind::Polygonal:
      return polygon_gauge(n.unit_ball, v);
  }
  throw std::logic_error("unreachable");
}

bool solidity_check(const LatticeNorm2& n) {
  if (n.kind != LatticeNorm2::Kind::Polygonal) return true;
  for (const Point2& v : n.unit_ball) {
    const Rational a = rabs(v.x);
    const Rational b = rabs(v.y);
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        if (polygon_gauge(n.unit_ball, {sx * a, sy * b}) > 1) return false;
  }
  return true;
}

AsymNorm2 make_asym(LatticeNorm2 base) {
  if (!solidity_check(base))
    throw std::invalid_argument("base norm is not a lattice norm");
  return {std::move(base)};
}

Rational q_of(const AsymNorm2& n, const Point2& v) {
  return norm_of(n.base, pos_part(v));
}

Rational qs_of(const AsymNorm2& n, const Point2& v) {
  const Rational a = q_of(n, v);
  const Rational b = q_of(n, -v);
  return a > b ? a : b;
}

bool ball_contains(const AsymNorm2& n, BallKind kind, const Point2& center,
                   const Rational& radius, const Point2& z) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  const Point2 d = z - center;
  return (kind == BallKind::Q ? q_of(n, d) : qs_of(n, d)) < radius;
}

}  // namespace asymlat
