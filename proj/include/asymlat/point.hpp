#pragma once

#include "asymlat/rational.hpp"

namespace asymlat {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point2 operator*(const Rational& s, const Point2& p) {
    return {s * p.x, s * p.y};
  }
  friend Point2 operator-(const Point2& p) { return {-p.x, -p.y}; }
};

struct Point3 {
  Rational x1;
  Rational x2;
  Rational x3;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
};

// Lexicographic order (x, then y); used for canonical chain starts.
inline bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline Rational cross(const Point2& a, const Point2& b) {
  return a.x * b.y - a.y * b.x;
}

inline Rational dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

// Sign of the signed area of (a, b, c): +1 left turn, -1 right, 0 collinear.
inline int orient(const Point2& a, const Point2& b, const Point2& c) {
  const Rational d = cross(b - a, c - a);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// Coordinatewise maximum with 0.
inline Point2 pos_part(const Point2& v) {
  return {v.x > 0 ? v.x : Rational(0), v.y > 0 ? v.y : Rational(0)};
}

// Coordinatewise partial order: a <= b.
inline bool dominates(const Point2& a, const Point2& b) {
  return a.x <= b.x && a.y <= b.y;
}

// Rational point on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2)) for
// t in (0,1]. First coordinate lands in [0,1).
inline Point2 circle_point(const Rational& t) {
  if (t <= 0 || t > 1)
    throw std::invalid_argument("circle_point: parameter outside (0,1]");
  const Rational den = 1 + t * t;
  return {(1 - t * t) / den, (2 * t) / den};
}

}  // namespace asymlat
