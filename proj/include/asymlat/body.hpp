#pragma once

#include <optional>
#include <vector>

#include "asymlat/point.hpp"

namespace asymlat {

// Closed convex polyhedral set in R^2, given by its boundary chain.
//
//   dim 0: one vertex, no rays.
//   dim 1: collinear vertex chain, optionally extended by rays along the
//          carrier line (ray_in before verts.front(), ray_out after
//          verts.back()).
//   dim 2 bounded:   cyclic CCW vertex loop (collinear pseudo-vertices
//          permitted).
//   dim 2 unbounded: open CCW chain with both rays present; the boundary
//          walk comes in from infinity along ray_in, runs through the
//          chain, and leaves along ray_out, with the region on its left.
struct ClosedPoly2 {
  std::vector<Point2> verts;
  std::optional<Point2> ray_in;
  std::optional<Point2> ray_out;
  bool cyclic = false;

  int dim() const;
  std::size_t edge_count() const;
};

// Structural well-formedness: convex position, orientation, ray
// consistency. Does not involve flags.
bool structure_ok(const ClosedPoly2& c);

// Geometric extent of one boundary edge. For a ray the face is
// {a + t*dir : t > 0} (the base point is a separate vertex face).
struct EdgeGeom {
  Point2 a;
  Point2 b;      // segment endpoint, or ray direction
  bool is_ray;
};

// Edge indexing: cyclic polygons have verts.size() edges, edge i following
// vertex i. Open chains list the ray_in edge first (if present), then the
// chain edges, then the ray_out edge.
EdgeGeom edge_geom(const ClosedPoly2& c, std::size_t eidx);

// Convex set with mixed open/closed boundary: the closed closure plus one
// inclusion flag per boundary face. The (relative) interior is always part
// of the set; only boundary faces carry flags.
struct FlaggedBody2 {
  ClosedPoly2 closure;
  std::vector<bool> vflags;  // one per vertex
  std::vector<bool> eflags;  // one per edge, indexed as in edge_geom
};

// Exact point location against the closure.
struct Location {
  enum class Kind { Outside, Interior, Vertex, Edge };
  Kind kind;
  std::size_t index = 0;  // vertex or edge index
};
Location locate(const ClosedPoly2& c, const Point2& z);

// Closed half-plane a*x + b*y >= c.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  Rational eval(const Point2& p) const { return a * p.x + b * p.y - c; }
};

// --- core operations -------------------------------------------------

// Invariant check: structure plus R1 (along every maximal collinear
// boundary chain the included faces form one gap-free interval) plus
// non-emptiness (dim < 2 sets must include at least one face).
bool validate(const FlaggedBody2& k);

// Exact membership: interior -> true, boundary face -> its flag,
// outside -> false.
bool membership(const FlaggedBody2& k, const Point2& z);

// Is there w in K with w >= z coordinatewise? This is membership of z in
// K + theta_0, decided by exact face enumeration.
bool quad_meets(const FlaggedBody2& k, const Point2& z);

// K + theta_0 as a flagged body. Requires the recession cone of the
// closure to lie in theta_0 (throws std::domain_error otherwise).
FlaggedBody2 saturate(const FlaggedBody2& k);

// Exact flagged intersection with a closed half-plane. Returns nullopt
// when the intersection is the empty set.
std::optional<FlaggedBody2> intersect_halfplane(const FlaggedBody2& k,
                                                const HalfPlane& h);

// Canonical form: trims excluded end faces of low-dimensional chains,
// removes inert pseudo-vertices, normalizes ray directions and chain
// start/orientation. Two bodies are equal as point sets iff their
// canonical forms are structurally identical.
FlaggedBody2 canonicalize(const FlaggedBody2& k);
bool canonical_equal(const FlaggedBody2& a, const FlaggedBody2& b);

// Exact containment of point sets, A subseteq B.
bool body_subset(const FlaggedBody2& a, const FlaggedBody2& b);

// Extreme directions of the closure's recession cone (0-2 entries).
std::vector<Point2> recession_dirs(const ClosedPoly2& c);
bool recession_in_theta0(const ClosedPoly2& c);

// --- geometry helpers shared with the analyzer -----------------------

// Clip of the closure by a closed half-plane (geometry only, no flags).
std::optional<ClosedPoly2> clip_closure(const ClosedPoly2& c,
                                        const HalfPlane& h);

// Inserts the given points as (pseudo-)vertices wherever they lie on the
// boundary of c and are not vertices already.
ClosedPoly2 insert_boundary_points(const ClosedPoly2& c,
                                   const std::vector<Point2>& pts);

// Flags every face of the closure by evaluating an exact membership
// predicate at one representative point per face.
template <typename Pred>
FlaggedBody2 flag_faces(const ClosedPoly2& c, Pred&& pred) {
  FlaggedBody2 k;
  k.closure = c;
  k.vflags.reserve(c.verts.size());
  for (const Point2& v : c.verts) k.vflags.push_back(pred(v));
  const std::size_t m = c.edge_count();
  k.eflags.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeGeom g = edge_geom(c, e);
    const Point2 rep = g.is_ray ? g.a + g.b : g.a + Rational(1, 2) * (g.b - g.a);
    k.eflags.push_back(pred(rep));
  }
  return k;
}

// Strict convex hull in CCW order; collinear interior points dropped.
// Degenerate inputs give 1 or 2 points.
std::vector<Point2> convex_hull_ccw(std::vector<Point2> pts);

// Fully closed hull of a point set as a flagged body (point, segment, or
// cyclic polygon).
FlaggedBody2 closed_hull_body(const std::vector<Point2>& pts);

// The NE hull of a vertex set saturated by theta_0: closure of
// conv(pts) + theta_0 (chain from the right extreme to the top extreme
// with rays (0,-1) and (-1,0)).
ClosedPoly2 saturated_hull(const std::vector<Point2>& pts);

// Maximal collinear boundary chains as face sequences; exposed for the
// R1-aware flag repair in the generator. true = vertex face.
struct FaceRef {
  bool is_vertex;
  std::size_t index;
};
std::vector<std::vector<FaceRef>> collinear_chains(const ClosedPoly2& c);

// Convenience constructors.
FlaggedBody2 point_body(const Point2& p);
FlaggedBody2 segment_body(const Point2& a, const Point2& b, bool a_included,
                          bool edge_included, bool b_included);
FlaggedBody2 polygon_body(std::vector<Point2> ccw_verts);  // fully closed
FlaggedBody2 cone_body(const Point2& apex);                // apex + theta_0

}  // namespace asymlat
