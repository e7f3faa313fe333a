#include "asymlat/body.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace asymlat {

namespace {

bool parallel(const Point2& a, const Point2& b) { return cross(a, b) == 0; }

bool same_direction(const Point2& a, const Point2& b) {
  return parallel(a, b) && dot(a, b) > 0;
}

bool is_zero(const Point2& p) { return p.x == 0 && p.y == 0; }

bool all_collinear(const std::vector<Point2>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (orient(pts[0], pts[1], pts[i]) != 0) return false;
  return true;
}

Rational polygon_area2(const std::vector<Point2>& v) {
  Rational a(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    a += cross(v[i], v[(i + 1) % v.size()]);
  return a;
}

// Rays of a collinear chain must run along the carrier line, pointing
// outward from their end of the chain.
bool rays_on_carrier(const ClosedPoly2& c) {
  if (c.verts.size() >= 2) {
    const Point2 u = c.verts.back() - c.verts.front();
    if (c.ray_in && !same_direction(*c.ray_in, -u)) return false;
    if (c.ray_out && !same_direction(*c.ray_out, u)) return false;
    return true;
  }
  // Single vertex: one ray is a ray set; two opposite rays are a line.
  if (c.ray_in && c.ray_out)
    return parallel(*c.ray_in, *c.ray_out) && dot(*c.ray_in, *c.ray_out) < 0;
  return true;
}

// Walk directions of the boundary, in order, including ray edges. For an
// open chain the walk moves from infinity (against ray_in) to infinity
// (along ray_out), with the region on its left.
struct WalkEdge {
  Point2 base;
  Point2 dir;
};

std::vector<WalkEdge> walk_edges(const ClosedPoly2& c) {
  std::vector<WalkEdge> w;
  if (c.cyclic) {
    for (std::size_t i = 0; i < c.verts.size(); ++i)
      w.push_back({c.verts[i], c.verts[(i + 1) % c.verts.size()] - c.verts[i]});
    return w;
  }
  if (c.ray_in) w.push_back({c.verts.front(), -*c.ray_in});
  for (std::size_t i = 0; i + 1 < c.verts.size(); ++i)
    w.push_back({c.verts[i], c.verts[i + 1] - c.verts[i]});
  if (c.ray_out) w.push_back({c.verts.back(), *c.ray_out});
  return w;
}

Point2 primitive_direction(const Point2& d) {
  // Scale a nonzero rational direction to a coprime integer vector.
  mpz_class l = lcm(d.x.get_den(), d.y.get_den());
  mpz_class nx = d.x.get_num() * (l / d.x.get_den());
  mpz_class ny = d.y.get_num() * (l / d.y.get_den());
  mpz_class g = gcd(abs(nx), abs(ny));
  if (g == 0) return d;
  return {Rational(nx / g), Rational(ny / g)};
}

}  // namespace

// Andrew monotone chain.
std::vector<Point2> convex_hull_ccw(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return lex_less(a, b);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && orient(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  if (h.size() < 3) {  // all collinear
    return {pts.front(), pts.back()};
  }
  return h;
}

FlaggedBody2 closed_hull_body(const std::vector<Point2>& pts) {
  const std::vector<Point2> h = convex_hull_ccw(pts);
  if (h.size() == 1) return point_body(h[0]);
  if (h.size() == 2) return segment_body(h[0], h[1], true, true, true);
  return polygon_body(h);
}

std::size_t ClosedPoly2::edge_count() const {
  if (cyclic) return verts.size();
  std::size_t m = verts.empty() ? 0 : verts.size() - 1;
  if (ray_in) ++m;
  if (ray_out) ++m;
  return m;
}

int ClosedPoly2::dim() const {
  if (cyclic) return 2;
  if (verts.size() == 1 && !ray_in && !ray_out) return 0;
  if (!all_collinear(verts)) return 2;
  return rays_on_carrier(*this) ? 1 : 2;
}

EdgeGeom edge_geom(const ClosedPoly2& c, std::size_t eidx) {
  if (c.cyclic)
    return {c.verts[eidx], c.verts[(eidx + 1) % c.verts.size()], false};
  std::size_t i = eidx;
  if (c.ray_in) {
    if (i == 0) return {c.verts.front(), *c.ray_in, true};
    --i;
  }
  if (i < c.verts.size() - 1) return {c.verts[i], c.verts[i + 1], false};
  return {c.verts.back(), *c.ray_out, true};
}

bool structure_ok(const ClosedPoly2& c) {
  if (c.verts.empty()) return false;
  for (std::size_t i = 0; i + 1 < c.verts.size(); ++i)
    if (c.verts[i] == c.verts[i + 1]) return false;
  if (c.ray_in && is_zero(*c.ray_in)) return false;
  if (c.ray_out && is_zero(*c.ray_out)) return false;

  if (c.cyclic) {
    if (c.ray_in || c.ray_out) return false;
    if (c.verts.size() < 3) return false;
    if (c.verts.front() == c.verts.back()) return false;
    if (polygon_area2(c.verts) <= 0) return false;
  }

  const int d = c.dim();
  if (d == 0) return true;

  if (d == 1) {
    if (c.cyclic) return false;
    if (!rays_on_carrier(c)) return false;
    // Chain strictly monotone along the carrier.
    if (c.verts.size() >= 2) {
      const Point2 u = c.verts.back() - c.verts.front();
      for (std::size_t i = 0; i + 1 < c.verts.size(); ++i) {
        const Point2 step = c.verts[i + 1] - c.verts[i];
        if (!same_direction(step, u)) return false;
      }
    }
    return true;
  }

  // dim 2
  if (!c.cyclic && !(c.ray_in && c.ray_out)) return false;
  const auto walk = walk_edges(c);
  // Local convexity: left turns only, no reversals.
  const std::size_t m = walk.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!c.cyclic && i + 1 == m) break;
    const Point2& t1 = walk[i].dir;
    const Point2& t2 = walk[(i + 1) % m].dir;
    const Rational cr = cross(t1, t2);
    if (cr < 0) return false;
    if (cr == 0 && dot(t1, t2) < 0) return false;
  }
  // Global convexity: every vertex and every recession direction lies in
  // the left half-plane of every edge line.
  std::vector<Point2> rays;
  if (c.ray_in) rays.push_back(*c.ray_in);
  if (c.ray_out) rays.push_back(*c.ray_out);
  for (const WalkEdge& e : walk) {
    for (const Point2& v : c.verts)
      if (cross(e.dir, v - e.base) < 0) return false;
    for (const Point2& r : rays)
      if (cross(e.dir, r) < 0) return false;
  }
  return true;
}

Location locate(const ClosedPoly2& c, const Point2& z) {
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    if (c.verts[i] == z) return {Location::Kind::Vertex, i};

  const std::size_t m = c.edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeGeom g = edge_geom(c, e);
    if (g.is_ray) {
      const Point2 w = z - g.a;
      if (parallel(w, g.b) && dot(w, g.b) > 0) return {Location::Kind::Edge, e};
    } else {
      if (orient(g.a, g.b, z) != 0) continue;
      const Point2 d = g.b - g.a;
      const Rational t = (d.x != 0) ? (z.x - g.a.x) / d.x : (z.y - g.a.y) / d.y;
      if (t > 0 && t < 1) return {Location::Kind::Edge, e};
    }
  }

  if (c.dim() == 2) {
    bool all_strict = true;
    for (const WalkEdge& e : walk_edges(c)) {
      const Rational s = cross(e.dir, z - e.base);
      if (s < 0) return {Location::Kind::Outside, 0};
      if (s == 0) all_strict = false;
    }
    if (all_strict) return {Location::Kind::Interior, 0};
    // On a supporting line but on no face: outside.
  }
  return {Location::Kind::Outside, 0};
}

std::vector<std::vector<FaceRef>> collinear_chains(const ClosedPoly2& c) {
  std::vector<std::vector<FaceRef>> chains;
  const std::size_t ne = c.edge_count();
  if (ne == 0) {
    chains.push_back({{true, 0}});
    return chains;
  }

  // Edge directions in boundary order, plus the vertex indices framing
  // each edge (vertex before / after; none at an infinite end).
  struct Item {
    std::size_t eidx;
    Point2 dir;
    std::optional<std::size_t> v_before, v_after;
  };
  std::vector<Item> items;
  if (c.cyclic) {
    for (std::size_t i = 0; i < ne; ++i)
      items.push_back({i, c.verts[(i + 1) % ne] - c.verts[i], i,
                       (i + 1) % c.verts.size()});
  } else {
    std::size_t e = 0;
    if (c.ray_in) items.push_back({e++, -*c.ray_in, std::nullopt, 0});
    for (std::size_t i = 0; i + 1 < c.verts.size(); ++i)
      items.push_back({e++, c.verts[i + 1] - c.verts[i], i, i + 1});
    if (c.ray_out)
      items.push_back(
          {e, *c.ray_out, c.verts.size() - 1, std::nullopt});
  }

  auto same_line = [&](const Item& a, const Item& b) {
    return parallel(a.dir, b.dir);
  };

  // Group consecutive edges into maximal runs on one line.
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [first, last]
  std::size_t start = 0;
  for (std::size_t i = 1; i <= items.size(); ++i) {
    if (i == items.size() || !same_line(items[i - 1], items[i])) {
      runs.push_back({start, i - 1});
      start = i;
    }
  }
  if (c.cyclic && runs.size() > 1 && same_line(items.back(), items.front())) {
    // Merge wraparound run.
    auto last = runs.back();
    runs.pop_back();
    runs.front().first = last.first;  // marks a wrapped run
    // Represent wrapped run as [last.first .. items.size()-1] + [0 .. first.second]
  }

  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto [f, l] = runs[r];
    std::vector<FaceRef> chain;
    std::vector<std::size_t> idxs;
    if (f <= l) {
      for (std::size_t i = f; i <= l; ++i) idxs.push_back(i);
    } else {  // wrapped (cyclic only)
      for (std::size_t i = f; i < items.size(); ++i) idxs.push_back(i);
      for (std::size_t i = 0; i <= l; ++i) idxs.push_back(i);
    }
    if (items[idxs.front()].v_before)
      chain.push_back({true, *items[idxs.front()].v_before});
    for (std::size_t i : idxs) {
      chain.push_back({false, items[i].eidx});
      if (items[i].v_after) chain.push_back({true, *items[i].v_after});
    }
    // For a full cyclic wrap the trailing vertex duplicates the leading
    // one; drop it.
    if (chain.size() >= 2 && chain.front().is_vertex &&
        chain.back().is_vertex &&
        chain.front().index == chain.back().index)
      chain.pop_back();
    chains.push_back(std::move(chain));
  }
  return chains;
}

bool validate(const FlaggedBody2& k) {
  const ClosedPoly2& c = k.closure;
  if (!structure_ok(c)) return false;
  if (k.vflags.size() != c.verts.size()) return false;
  if (k.eflags.size() != c.edge_count()) return false;

  auto flag_of = [&](const FaceRef& f) {
    return f.is_vertex ? k.vflags[f.index] : k.eflags[f.index];
  };
  for (const auto& chain : collinear_chains(c)) {
    // Included faces must form one gap-free interval (invariant R1).
    int first = -1, last = -1;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (flag_of(chain[i])) {
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
      }
    }
    for (int i = first; i >= 0 && i <= last; ++i)
      if (!flag_of(chain[i])) return false;
  }

  if (c.dim() < 2) {
    bool any = false;
    for (bool b : k.vflags) any = any || b;
    for (bool b : k.eflags) any = any || b;
    if (!any) return false;  // empty set is not representable
  }
  return true;
}

bool membership(const FlaggedBody2& k, const Point2& z) {
  const Location loc = locate(k.closure, z);
  switch (loc.kind) {
    case Location::Kind::Interior:
      return true;
    case Location::Kind::Vertex:
      return k.vflags[loc.index];
    case Location::Kind::Edge:
      return k.eflags[loc.index];
    case Location::Kind::Outside:
      return false;
  }
  return false;
}

std::vector<Point2> recession_dirs(const ClosedPoly2& c) {
  std::vector<Point2> d;
  if (c.ray_in) d.push_back(*c.ray_in);
  if (c.ray_out) d.push_back(*c.ray_out);
  return d;
}

bool recession_in_theta0(const ClosedPoly2& c) {
  for (const Point2& d : recession_dirs(c))
    if (d.x > 0 || d.y > 0) return false;
  return true;
}

namespace {

// Does t exist with t in the open interval (0, hi_cap) (hi_cap nullopt =
// +infinity) such that a + t*d lies in the quadrant {w >= z}?
bool open_param_meets_quadrant(const Point2& a, const Point2& d,
                               const std::optional<Rational>& hi_cap,
                               const Point2& z) {
  Rational lo(0);
  std::optional<Rational> hi = hi_cap;
  bool lo_open = true, hi_open = true;
  auto constrain = [&](const Rational& coeff, const Rational& rhs) -> bool {
    // coeff * t >= rhs
    if (coeff > 0) {
      const Rational bound = rhs / coeff;
      if (bound > lo) { lo = bound; lo_open = false; }
    } else if (coeff < 0) {
      const Rational bound = rhs / coeff;
      if (!hi || bound < *hi) { hi = bound; hi_open = false; }
    } else if (rhs > 0) {
      return false;
    }
    return true;
  };
  if (!constrain(d.x, z.x - a.x)) return false;
  if (!constrain(d.y, z.y - a.y)) return false;
  if (!hi) return true;  // lo finite, no upper bound
  if (lo < *hi) return true;
  if (lo == *hi && !lo_open && !hi_open) {
    // Single feasible t; must be strictly inside the open range.
    return lo > 0 && (!hi_cap || lo < *hi_cap);
  }
  return false;
}

}  // namespace

bool quad_meets(const FlaggedBody2& k, const Point2& z) {
  const ClosedPoly2& c = k.closure;
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    if (k.vflags[i] && c.verts[i].x >= z.x && c.verts[i].y >= z.y) return true;
  const std::size_t m = c.edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    if (!k.eflags[e]) continue;
    const EdgeGeom g = edge_geom(c, e);
    if (g.is_ray) {
      if (open_param_meets_quadrant(g.a, g.b, std::nullopt, z)) return true;
    } else {
      if (open_param_meets_quadrant(g.a, g.b - g.a, Rational(1), z))
        return true;
    }
  }
  if (c.dim() == 2) {
    auto cx = clip_closure(c, {Rational(1), Rational(0), z.x});
    if (cx) {
      auto cy = clip_closure(*cx, {Rational(0), Rational(1), z.y});
      if (cy && cy->dim() == 2) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------
// Half-plane clipping of a closure.

namespace {

struct Piece {
  std::optional<Point2> rin;
  std::vector<Point2> pts;
  std::optional<Point2> rout;
};

void piece_add(Piece& p, const Point2& q) {
  if (p.pts.empty() || !(p.pts.back() == q)) p.pts.push_back(q);
}

// Clip an open boundary walk (chain with optional rays). Returns the kept
// pieces in walk order; each ends either at a cut point on the clip line
// or at infinity along a recorded ray.
std::vector<Piece> clip_open_walk(const ClosedPoly2& c, const HalfPlane& h) {
  std::vector<Piece> pieces;
  Piece cur;
  bool active = false;
  auto begin = [&](std::optional<Point2> rin) {
    cur = Piece{std::move(rin), {}, std::nullopt};
    active = true;
  };
  auto finish = [&](std::optional<Point2> rout) {
    cur.rout = std::move(rout);
    pieces.push_back(cur);
    active = false;
  };
  auto gdir = [&](const Point2& d) -> Rational { return h.a * d.x + h.b * d.y; };

  const Point2& v0 = c.verts.front();
  const Point2& vl = c.verts.back();

  if (c.ray_in) {
    const Point2 d = *c.ray_in;
    const Rational r = gdir(d);
    const Rational g0 = h.eval(v0);
    if (r > 0) {
      begin(d);
      if (g0 < 0) {  // kept only beyond the crossing, cut before v0
        piece_add(cur, v0 + (-g0 / r) * d);
        finish(std::nullopt);
      }
    } else if (r == 0) {
      if (g0 >= 0) begin(d);
    } else {  // r < 0: kept from the crossing down to v0 (if any)
      if (g0 >= 0) {
        const Rational t = -g0 / r;
        begin(std::nullopt);
        if (t > 0) piece_add(cur, v0 + t * d);
      }
    }
  }

  // Chain vertices and edges.
  {
    const Rational g0 = h.eval(v0);
    if (g0 >= 0) {
      if (!active) begin(std::nullopt);
      piece_add(cur, v0);
    }
  }
  for (std::size_t i = 0; i + 1 < c.verts.size(); ++i) {
    const Point2& p = c.verts[i];
    const Point2& q = c.verts[i + 1];
    const Rational gp = h.eval(p);
    const Rational gq = h.eval(q);
    if (gp >= 0 && gq >= 0) {
      piece_add(cur, q);
    } else if (gp >= 0 && gq < 0) {
      if (gp > 0) piece_add(cur, p + (gp / (gp - gq)) * (q - p));
      finish(std::nullopt);
    } else if (gp < 0 && gq >= 0) {
      begin(std::nullopt);
      if (gq > 0) piece_add(cur, p + (gp / (gp - gq)) * (q - p));
      piece_add(cur, q);
    }
  }

  if (c.ray_out) {
    const Point2 d = *c.ray_out;
    const Rational r = gdir(d);
    const Rational gl = h.eval(vl);
    if (r > 0) {
      if (gl >= 0) {
        finish(d);
      } else {  // re-enters at the crossing and stays
        begin(std::nullopt);
        piece_add(cur, vl + (-gl / r) * d);
        finish(d);
      }
    } else if (r == 0) {
      if (active) finish(d);
    } else {  // r < 0
      if (active) {
        const Rational t = -gl / r;
        if (t > 0) piece_add(cur, vl + t * d);
        finish(std::nullopt);
      }
    }
  } else if (active) {
    finish(std::nullopt);
  }
  return pieces;
}

// Build a ClosedPoly2 from raw boundary data, reclassifying degenerate
// results (flattened polygons, single points).
std::optional<ClosedPoly2> normalize_poly(std::vector<Point2> verts,
                                          std::optional<Point2> rin,
                                          std::optional<Point2> rout,
                                          bool want_cyclic) {
  // Drop consecutive duplicates (and the wrap pair for cyclic data).
  std::vector<Point2> v;
  for (const Point2& p : verts)
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  if (want_cyclic && v.size() >= 2 && v.front() == v.back()) v.pop_back();
  if (v.empty()) return std::nullopt;

  if (!rin && !rout) {
    if (v.size() == 1) return ClosedPoly2{v, {}, {}, false};
    if (all_collinear(v)) {
      // Flatten to a chain ordered along the carrier.
      std::sort(v.begin(), v.end(),
                [](const Point2& a, const Point2& b) { return lex_less(a, b); });
      v.erase(std::unique(v.begin(), v.end()), v.end());
      if (v.size() == 1) return ClosedPoly2{v, {}, {}, false};
      return ClosedPoly2{v, {}, {}, false};
    }
    if (want_cyclic) return ClosedPoly2{v, {}, {}, true};
    return ClosedPoly2{v, {}, {}, true};  // closed by construction
  }

  ClosedPoly2 c{v, rin, rout, false};
  return c;
}

}  // namespace

std::optional<ClosedPoly2> clip_closure(const ClosedPoly2& c,
                                        const HalfPlane& h) {
  const int d = c.dim();
  if (d == 0)
    return h.eval(c.verts[0]) >= 0 ? std::optional<ClosedPoly2>(c)
                                   : std::nullopt;

  if (c.cyclic) {
    // Sutherland-Hodgman on the convex loop.
    std::vector<Point2> out;
    const std::size_t n = c.verts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& p = c.verts[i];
      const Point2& q = c.verts[(i + 1) % n];
      const Rational gp = h.eval(p);
      const Rational gq = h.eval(q);
      if (gp >= 0) out.push_back(p);
      if ((gp > 0 && gq < 0) || (gp < 0 && gq > 0))
        out.push_back(p + (gp / (gp - gq)) * (q - p));
    }
    if (out.empty()) return std::nullopt;
    return normalize_poly(std::move(out), std::nullopt, std::nullopt, true);
  }

  // Open walk (dim 1 chain or dim 2 unbounded region).
  auto pieces = clip_open_walk(c, h);
  if (pieces.empty()) return std::nullopt;

  if (d == 1) {
    assert(pieces.size() == 1);
    Piece& p = pieces[0];
    if (p.pts.empty()) {
      // Whole carrier kept without touching a vertex: full line piece.
      p.pts.push_back(c.verts.front());
      return std::nullopt;  // cannot happen for valid chains
    }
    return normalize_poly(p.pts, p.rin, p.rout, false);
  }

  // dim 2 unbounded region.
  if (pieces.size() == 2) {
    // Kept at both infinite ends; the discarded middle is replaced by a
    // chord on the clip line between the cut points.
    Piece& a = pieces[0];
    Piece& b = pieces[1];
    std::vector<Point2> v = a.pts;
    for (const Point2& p : b.pts)
      if (v.empty() || !(v.back() == p)) v.push_back(p);
    return normalize_poly(std::move(v), a.rin, b.rout, false);
  }

  Piece& p = pieces[0];
  if (p.rin && p.rout) return normalize_poly(p.pts, p.rin, p.rout, false);
  if (p.rin && !p.rout) {
    // Exits through the clip line; the boundary continues along it to
    // infinity in the direction (b, -a).
    if (p.pts.empty()) return std::nullopt;
    return normalize_poly(p.pts, p.rin, Point2{h.b, -h.a}, false);
  }
  if (!p.rin && p.rout) {
    if (p.pts.empty()) return std::nullopt;
    return normalize_poly(p.pts, Point2{-h.b, h.a}, p.rout, false);
  }
  // Bounded remainder: cut points close into a cyclic polygon (or a
  // degenerate zero-set face).
  return normalize_poly(p.pts, std::nullopt, std::nullopt, true);
}

ClosedPoly2 insert_boundary_points(const ClosedPoly2& c,
                                   const std::vector<Point2>& pts) {
  // param position of each insertion per edge index
  std::map<std::size_t, std::vector<std::pair<Rational, Point2>>> ins;
  for (const Point2& p : pts) {
    const Location loc = locate(c, p);
    if (loc.kind != Location::Kind::Edge) continue;
    const EdgeGeom g = edge_geom(c, loc.index);
    const Point2 d = g.is_ray ? g.b : g.b - g.a;
    const Rational t = (d.x != 0) ? (p.x - g.a.x) / d.x : (p.y - g.a.y) / d.y;
    ins[loc.index].push_back({t, p});
  }
  if (ins.empty()) return c;
  for (auto& [e, v] : ins) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const auto& a, const auto& b) {
                          return a.second == b.second;
                        }),
            v.end());
  }

  ClosedPoly2 out;
  out.cyclic = c.cyclic;
  out.ray_in = c.ray_in;
  out.ray_out = c.ray_out;
  auto edge_of_chain = [&](std::size_t i) {  // edge index of chain edge i
    return i + (c.ray_in && !c.cyclic ? 1 : 0);
  };
  if (!c.cyclic && c.ray_in) {
    // Points on ray_in precede the first vertex, farthest first.
    auto it = ins.find(0);
    if (it != ins.end())
      for (auto r = it->second.rbegin(); r != it->second.rend(); ++r)
        out.verts.push_back(r->second);
  }
  const std::size_t n = c.verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.verts.push_back(c.verts[i]);
    const bool has_chain_edge = c.cyclic ? true : (i + 1 < n);
    if (has_chain_edge) {
      auto it = ins.find(edge_of_chain(i));
      if (it != ins.end())
        for (const auto& [t, p] : it->second) out.verts.push_back(p);
    }
  }
  if (!c.cyclic && c.ray_out) {
    auto it = ins.find(c.edge_count() - 1);
    if (it != ins.end())
      for (const auto& [t, p] : it->second) out.verts.push_back(p);
  }
  return out;
}

ClosedPoly2 saturated_hull(const std::vector<Point2>& pts) {
  const std::vector<Point2> hull = convex_hull_ccw(pts);

  // Extremes: Rt = rightmost (then topmost), T = topmost (then rightmost).
  auto rt_less = [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  };
  auto t_less = [](const Point2& a, const Point2& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  };
  const Point2 Rt = *std::max_element(pts.begin(), pts.end(), rt_less);
  const Point2 T = *std::max_element(pts.begin(), pts.end(), t_less);

  ClosedPoly2 out;
  out.ray_in = Point2{Rational(0), Rational(-1)};
  out.ray_out = Point2{Rational(-1), Rational(0)};
  if (Rt == T) {
    out.verts = {Rt};
    return out;
  }
  if (hull.size() == 2) {
    out.verts = {Rt, T};
    return out;
  }
  // CCW arc of the hull from Rt to T.
  std::size_t i_rt = 0, i_t = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (hull[i] == Rt) i_rt = i;
    if (hull[i] == T) i_t = i;
  }
  for (std::size_t i = i_rt;; i = (i + 1) % hull.size()) {
    out.verts.push_back(hull[i]);
    if (i == i_t) break;
  }
  return out;
}

FlaggedBody2 saturate(const FlaggedBody2& k) {
  // Work on the canonical representative: a low-dimensional chain may
  // carry excluded end faces, and the hull must be taken over the closure
  // of the set itself, not over the stated chain.
  const FlaggedBody2 kc = canonicalize(k);
  if (!recession_in_theta0(kc.closure))
    throw std::domain_error("saturate: recession cone not within theta_0");
  ClosedPoly2 base = saturated_hull(kc.closure.verts);
  base = insert_boundary_points(base, kc.closure.verts);
  return flag_faces(base, [&](const Point2& z) { return quad_meets(kc, z); });
}

std::optional<FlaggedBody2> intersect_halfplane(const FlaggedBody2& k,
                                                const HalfPlane& h) {
  auto clipped = clip_closure(k.closure, h);
  if (!clipped) return std::nullopt;
  const ClosedPoly2 with_pts = insert_boundary_points(*clipped, k.closure.verts);
  FlaggedBody2 out =
      flag_faces(with_pts, [&](const Point2& z) { return membership(k, z); });
  if (out.closure.dim() < 2) {
    bool any = false;
    for (bool b : out.vflags) any = any || b;
    for (bool b : out.eflags) any = any || b;
    if (!any) return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------
// Canonical form.

namespace {

void reverse_chain(FlaggedBody2& b) {
  std::reverse(b.closure.verts.begin(), b.closure.verts.end());
  std::swap(b.closure.ray_in, b.closure.ray_out);
  std::reverse(b.vflags.begin(), b.vflags.end());
  std::reverse(b.eflags.begin(), b.eflags.end());
}

// Rebuild flags after removing vertex vi from an open chain, merging its
// two neighboring edge faces (which carry equal flags).
FlaggedBody2 remove_vertex_open(const FlaggedBody2& b, std::size_t vi) {
  FlaggedBody2 out;
  out.closure = b.closure;
  out.closure.verts.erase(out.closure.verts.begin() + vi);
  out.vflags = b.vflags;
  out.vflags.erase(out.vflags.begin() + vi);
  // Edge faces: the edge arriving at vi and the edge leaving vi merge.
  const std::size_t off = b.closure.ray_in ? 1 : 0;
  // Index of the edge leaving vertex vi (chain edge vi, or ray_out).
  const std::size_t leaving =
      (vi + 1 < b.closure.verts.size()) ? off + vi : b.eflags.size() - 1;
  out.eflags = b.eflags;
  out.eflags.erase(out.eflags.begin() + leaving);
  return out;
}

FlaggedBody2 remove_vertex_cyclic(const FlaggedBody2& b, std::size_t vi) {
  FlaggedBody2 out;
  out.closure = b.closure;
  out.closure.verts.erase(out.closure.verts.begin() + vi);
  out.vflags = b.vflags;
  out.vflags.erase(out.vflags.begin() + vi);
  out.eflags = b.eflags;
  out.eflags.erase(out.eflags.begin() + vi);  // edge following vi merges back
  return out;
}

}  // namespace

FlaggedBody2 canonicalize(const FlaggedBody2& k) {
  FlaggedBody2 b = k;

  // 1. Trim excluded end faces of low-dimensional chains: they do not
  //    belong to the point set, so the canonical closure drops them.
  if (!b.closure.cyclic && b.closure.dim() <= 1) {
    bool changed = true;
    while (changed) {
      changed = false;
      // Excluded rays first.
      if (b.closure.ray_in && !b.eflags.front()) {
        b.closure.ray_in.reset();
        b.eflags.erase(b.eflags.begin());
        changed = true;
      }
      if (b.closure.ray_out && !b.eflags.back()) {
        b.closure.ray_out.reset();
        b.eflags.pop_back();
        changed = true;
      }
      // Excluded end vertex together with its excluded adjacent edge.
      if (!b.closure.ray_in && b.closure.verts.size() >= 2 &&
          !b.vflags.front() && !b.eflags.front()) {
        b.closure.verts.erase(b.closure.verts.begin());
        b.vflags.erase(b.vflags.begin());
        b.eflags.erase(b.eflags.begin());
        changed = true;
      }
      if (!b.closure.ray_out && b.closure.verts.size() >= 2 &&
          !b.vflags.back() && !b.eflags.back()) {
        b.closure.verts.pop_back();
        b.vflags.pop_back();
        b.eflags.pop_back();
        changed = true;
      }
    }
  }

  // 2. Remove inert pseudo-vertices (collinear, flags equal on both sides).
  bool changed = true;
  while (changed) {
    changed = false;
    const ClosedPoly2& c = b.closure;
    const std::size_t n = c.verts.size();
    if (c.cyclic) {
      for (std::size_t i = 0; i < n && n > 3; ++i) {
        const Point2& prev = c.verts[(i + n - 1) % n];
        const Point2& next = c.verts[(i + 1) % n];
        if (orient(prev, c.verts[i], next) != 0) continue;
        const bool fe_prev = b.eflags[(i + n - 1) % n];
        const bool fe_next = b.eflags[i];
        if (b.vflags[i] == fe_prev && fe_prev == fe_next) {
          b = remove_vertex_cyclic(b, i);
          changed = true;
          break;
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t off = c.ray_in ? 1 : 0;
        bool collinear_here = false;
        bool fe_prev = false, fe_next = false;
        if (i == 0) {
          if (!c.ray_in || n < 2) continue;
          if (!same_direction(*c.ray_in, c.verts[0] - c.verts[1])) continue;
          collinear_here = true;
          fe_prev = b.eflags[0];
          fe_next = b.eflags[off + 0];
        } else if (i + 1 == n) {
          if (!c.ray_out || n < 2) continue;
          if (!same_direction(*c.ray_out, c.verts[n - 1] - c.verts[n - 2]))
            continue;
          collinear_here = true;
          fe_prev = b.eflags[off + i - 1];
          fe_next = b.eflags.back();
        } else {
          if (orient(c.verts[i - 1], c.verts[i], c.verts[i + 1]) != 0)
            continue;
          collinear_here = true;
          fe_prev = b.eflags[off + i - 1];
          fe_next = b.eflags[off + i];
        }
        if (collinear_here && b.vflags[i] == fe_prev && fe_prev == fe_next) {
          b = remove_vertex_open(b, i);
          changed = true;
          break;
        }
      }
    }
  }

  // 3. Primitive ray directions.
  if (b.closure.ray_in) b.closure.ray_in = primitive_direction(*b.closure.ray_in);
  if (b.closure.ray_out)
    b.closure.ray_out = primitive_direction(*b.closure.ray_out);

  // 4. Canonical start / orientation.
  if (b.closure.cyclic) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < b.closure.verts.size(); ++i)
      if (lex_less(b.closure.verts[i], b.closure.verts[best])) best = i;
    std::rotate(b.closure.verts.begin(), b.closure.verts.begin() + best,
                b.closure.verts.end());
    std::rotate(b.vflags.begin(), b.vflags.begin() + best, b.vflags.end());
    std::rotate(b.eflags.begin(), b.eflags.begin() + best, b.eflags.end());
  } else if (b.closure.dim() == 1) {
    const bool two_rays = b.closure.ray_in && b.closure.ray_out;
    bool rev = false;
    if (two_rays) {
      rev = lex_less(*b.closure.ray_out, *b.closure.ray_in);
    } else if (b.closure.ray_in) {
      rev = true;  // single-ray chains keep the ray at the back
    } else if (!b.closure.ray_out && b.closure.verts.size() >= 2) {
      rev = lex_less(b.closure.verts.back(), b.closure.verts.front());
    }
    if (rev) reverse_chain(b);
  }
  return b;
}

bool canonical_equal(const FlaggedBody2& a, const FlaggedBody2& b) {
  const FlaggedBody2 ca = canonicalize(a);
  const FlaggedBody2 cb = canonicalize(b);
  if (ca.closure.cyclic != cb.closure.cyclic) return false;
  if (!(ca.closure.verts == cb.closure.verts)) return false;
  if (ca.closure.ray_in != cb.closure.ray_in) return false;
  if (ca.closure.ray_out != cb.closure.ray_out) return false;
  return ca.vflags == cb.vflags && ca.eflags == cb.eflags;
}

namespace {

bool recession_cone_contains(const ClosedPoly2& c, const Point2& d) {
  const auto dirs = recession_dirs(c);
  if (dirs.empty()) return false;
  if (dirs.size() == 1) return same_direction(dirs[0], d);
  const Rational cr = cross(dirs[0], dirs[1]);
  if (cr == 0) {
    if (dot(dirs[0], dirs[1]) < 0)  // full line
      return parallel(dirs[0], d);
    return same_direction(dirs[0], d);
  }
  const Rational lam = cross(d, dirs[1]) / cr;
  const Rational mu = cross(dirs[0], d) / cr;
  return lam >= 0 && mu >= 0;
}

// Representative points of an included face of A, refined at B's vertices
// so that each representative lies in a region where B's flags are
// constant.
std::vector<Point2> face_reps(const EdgeGeom& g, const ClosedPoly2& b) {
  const Point2 d = g.is_ray ? g.b : g.b - g.a;
  std::vector<Rational> ts;
  for (const Point2& v : b.verts) {
    if (g.is_ray) {
      const Point2 w = v - g.a;
      if (parallel(w, d) && dot(w, d) > 0)
        ts.push_back((d.x != 0) ? w.x / d.x : w.y / d.y);
    } else {
      if (orient(g.a, g.b, v) == 0) {
        const Rational t =
            (d.x != 0) ? (v.x - g.a.x) / d.x : (v.y - g.a.y) / d.y;
        if (t > 0 && t < 1) ts.push_back(t);
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<Point2> reps;
  Rational prev(0);
  for (const Rational& t : ts) {
    reps.push_back(g.a + ((prev + t) / 2) * d);  // open sub-piece
    reps.push_back(g.a + t * d);                 // the split point itself
    prev = t;
  }
  if (g.is_ray) {
    reps.push_back(g.a + (prev + 1) * d);
  } else {
    reps.push_back(g.a + ((prev + 1) / 2) * d);
  }
  return reps;
}

}  // namespace

bool body_subset(const FlaggedBody2& a0, const FlaggedBody2& b0) {
  // The stated chain of a low-dimensional set may exceed the closure of
  // the set itself; containment is a statement about the sets, so compare
  // the canonical representatives.
  const FlaggedBody2 a = canonicalize(a0);
  const FlaggedBody2 b = canonicalize(b0);
  // Closure containment.
  for (const Point2& v : a.closure.verts)
    if (locate(b.closure, v).kind == Location::Kind::Outside) return false;
  for (const Point2& d : recession_dirs(a.closure))
    if (!recession_cone_contains(b.closure, d)) return false;

  // Included faces of A land inside B.
  for (std::size_t i = 0; i < a.closure.verts.size(); ++i)
    if (a.vflags[i] && !membership(b, a.closure.verts[i])) return false;
  for (std::size_t e = 0; e < a.closure.edge_count(); ++e) {
    if (!a.eflags[e]) continue;
    for (const Point2& rep : face_reps(edge_geom(a.closure, e), b.closure))
      if (!membership(b, rep)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// Constructors.

FlaggedBody2 point_body(const Point2& p) {
  return {{{p}, {}, {}, false}, {true}, {}};
}

FlaggedBody2 segment_body(const Point2& a, const Point2& b, bool a_included,
                          bool edge_included, bool b_included) {
  return {{{a, b}, {}, {}, false},
          {a_included, b_included},
          {edge_included}};
}

FlaggedBody2 polygon_body(std::vector<Point2> ccw_verts) {
  if (polygon_area2(ccw_verts) < 0)
    std::reverse(ccw_verts.begin(), ccw_verts.end());
  const std::size_t n = ccw_verts.size();
  return {{std::move(ccw_verts), {}, {}, true},
          std::vector<bool>(n, true),
          std::vector<bool>(n, true)};
}

FlaggedBody2 cone_body(const Point2& apex) {
  ClosedPoly2 c;
  c.verts = {apex};
  c.ray_in = Point2{Rational(0), Rational(-1)};
  c.ray_out = Point2{Rational(-1), Rational(0)};
  return {c, {true}, {true, true}};
}

}  // namespace asymlat
