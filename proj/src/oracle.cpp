#include "asymlat/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace asymlat {

namespace {

Rational coord_of(const Point2& p, bool x_axis) { return x_axis ? p.x : p.y; }

// Face-level inclusion lookup, written against locate directly so this
// file shares no decision logic with the analyzer.
bool face_included(const FlaggedBody2& k, const Point2& z) {
  const Location l = locate(k.closure, z);
  switch (l.kind) {
    case Location::Kind::Interior:
      return true;
    case Location::Kind::Vertex:
      return k.vflags[l.index];
    case Location::Kind::Edge:
      return k.eflags[l.index];
    case Location::Kind::Outside:
      return false;
  }
  return false;
}

Rational dot3(const Point3& a, const Point3& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace

bool proj_sup_check(const FlaggedBody2& k, int axis) {
  const bool x_axis = (axis == 1);
  const ClosedPoly2& c = k.closure;
  for (const Point2& d : recession_dirs(c))
    if (coord_of(d, x_axis) > 0)
      throw std::domain_error("projection unbounded above");
  Rational sup = coord_of(c.verts[0], x_axis);
  for (const Point2& p : c.verts)
    if (coord_of(p, x_axis) > sup) sup = coord_of(p, x_axis);
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    if (k.vflags[i] && coord_of(c.verts[i], x_axis) == sup) return true;
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (!k.eflags[e]) continue;
    const EdgeGeom g = edge_geom(c, e);
    const bool on_line =
        g.is_ray ? (coord_of(g.a, x_axis) == sup && coord_of(g.b, x_axis) == 0)
                 : (coord_of(g.a, x_axis) == sup &&
                    coord_of(g.b, x_axis) == sup);
    if (on_line) return true;
  }
  return false;
}

bool f_arc_check(const FlaggedBody2& k, const Landmarks& lm) {
  for (std::size_t i = 0; i < lm.f_chain.size(); ++i) {
    if (!face_included(k, lm.f_chain[i])) return false;
    if (i + 1 < lm.f_chain.size()) {
      const Point2 mid = Rational(1, 2) * (lm.f_chain[i] + lm.f_chain[i + 1]);
      if (!face_included(k, mid)) return false;
    }
  }
  return true;
}

bool cone_hull_check(const FlaggedBody2& k, const Extrema& e) {
  const Point2 cl = e.corner_left();
  const Point2 cr = e.corner_right();
  if (cl == cr) return true;
  // co(L1 u L2): the chord plus theta_0, open along the two boundary rays
  // (no combination of ray points reaches them).
  ClosedPoly2 c;
  c.verts = {cr, cl};
  c.ray_in = Point2{Rational(0), Rational(-1)};
  c.ray_out = Point2{Rational(-1), Rational(0)};
  const FlaggedBody2 hull{c, {true, true}, {false, true, false}};
  assert(validate(hull));
  return body_subset(hull, k);
}

Point2 uncovered_point(const CoverWitness& w, const FlaggedBody2& k,
                       const std::vector<Rational>& ts) {
  if (w.family == CoverWitness::Family::Condition)
    throw WitnessInvalid("witness names a condition, not a cover family");
  if (ts.empty()) throw std::invalid_argument("empty subfamily");
  Rational tmin = ts[0];
  for (const Rational& t : ts) {
    if (t <= 0) throw std::invalid_argument("cover parameters must be positive");
    if (t < tmin) tmin = t;
  }
  if (membership(k, w.anchor))
    throw WitnessInvalid("anchor belongs to the set");

  const bool x_axis = (w.family == CoverWitness::Family::U);
  const Rational thr = coord_of(w.anchor, x_axis) - tmin / 2;
  const ClosedPoly2& c = k.closure;

  for (const Point2& d : recession_dirs(c))
    if (coord_of(d, x_axis) > 0)
      throw WitnessInvalid("set unbounded toward the family direction");

  if (c.dim() == 2) {
    Rational hi = coord_of(c.verts[0], x_axis);
    Rational lo = hi;
    for (const Point2& p : c.verts) {
      if (coord_of(p, x_axis) > hi) hi = coord_of(p, x_axis);
      if (coord_of(p, x_axis) < lo) lo = coord_of(p, x_axis);
    }
    if (thr < hi) {
      Rational base = thr > lo ? thr : lo;
      // keep the slice strictly inside the x-range of the closure (a
      // single-vertex closure still extends left along its recession cone)
      if (!(base < hi)) base = thr;
      const Rational xbar = (base + hi) / 2;
      // Slice the closure along the line coord = xbar; its relative
      // interior is interior of the body, hence in the set.
      const HalfPlane h1 = x_axis
                               ? HalfPlane{Rational(1), Rational(0), xbar}
                               : HalfPlane{Rational(0), Rational(1), xbar};
      const HalfPlane h2 = x_axis
                               ? HalfPlane{Rational(-1), Rational(0), -xbar}
                               : HalfPlane{Rational(0), Rational(-1), -xbar};
      auto s1 = clip_closure(c, h1);
      if (s1) {
        auto slice = clip_closure(*s1, h2);
        if (slice) {
          Rational top = coord_of(slice->verts[0], !x_axis);
          Rational bot = top;
          for (const Point2& p : slice->verts) {
            const Rational q = coord_of(p, !x_axis);
            if (q > top) top = q;
            if (q < bot) bot = q;
          }
          const bool open_below = slice->ray_in || slice->ray_out;
          const Rational mid =
              open_below ? Rational(top - 1) : Rational((top + bot) / 2);
          const Point2 cand = x_axis ? Point2{xbar, mid} : Point2{mid, xbar};
          if (membership(k, cand)) return cand;
        }
      }
    }
  }

  // Exact search over included faces meeting the strip coord >= thr.
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    if (k.vflags[i] && coord_of(c.verts[i], x_axis) >= thr) return c.verts[i];
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    if (!k.eflags[e]) continue;
    const EdgeGeom g = edge_geom(c, e);
    const Point2 d = g.is_ray ? g.b : g.b - g.a;
    const Rational c0 = coord_of(g.a, x_axis);
    const Rational cd = coord_of(d, x_axis);
    // open parameter interval of the face
    Rational lo(0);
    std::optional<Rational> hi =
        g.is_ray ? std::nullopt : std::optional<Rational>(Rational(1));
    // impose c0 + t*cd >= thr
    if (cd > 0) {
      const Rational bound = (thr - c0) / cd;
      if (bound > lo) lo = bound;
    } else if (cd < 0) {
      const Rational bound = (thr - c0) / cd;
      if (!hi || bound < *hi) hi = bound;
    } else if (c0 < thr) {
      continue;
    }
    if (hi && !(lo < *hi)) continue;
    const Rational t = hi ? Rational((lo + *hi) / 2) : Rational(lo + 1);
    return g.a + t * d;
  }
  throw WitnessInvalid("no point of the set lies in the required strip");
}

CrossCheckReport cross_check(const FlaggedBody2& k, const Decomposition& d,
                             std::size_t n, std::uint64_t seed) {
  const FlaggedBody2 a = assemble(d);
  std::mt19937_64 rng(seed);
  const ClosedPoly2& c = k.closure;

  long xlo = floor_long(c.verts[0].x), xhi = xlo;
  long ylo = floor_long(c.verts[0].y), yhi = ylo;
  for (const Point2& p : c.verts) {
    xlo = std::min(xlo, floor_long(p.x));
    xhi = std::max(xhi, floor_long(p.x) + 1);
    ylo = std::min(ylo, floor_long(p.y));
    yhi = std::max(yhi, floor_long(p.y) + 1);
  }
  xlo -= 2; ylo -= 2; xhi += 2; yhi += 2;

  auto small = [&]() -> Rational {
    return rat(static_cast<long>(rng() % 9) - 4, 64);
  };
  auto box_coord = [&](long lo, long hi) -> Rational {
    const unsigned long span = static_cast<unsigned long>(hi - lo) * 16 + 1;
    return Rational(lo) + rat(static_cast<long>(rng() % span), 16);
  };

  CrossCheckReport rep;
  rep.samples = n;
  const std::size_t faces = c.verts.size() + c.edge_count();
  for (std::size_t i = 0; i < n; ++i) {
    Point2 z;
    if (i % 2 == 0 && faces > 0) {
      const std::size_t f = rng() % faces;
      Point2 base;
      if (f < c.verts.size()) {
        base = c.verts[f];
      } else {
        const EdgeGeom g = edge_geom(c, f - c.verts.size());
        const Rational t =
            g.is_ray ? rat(static_cast<long>(rng() % 32) + 1, 8)
                     : rat(static_cast<long>(rng() % 15) + 1, 16);
        base = g.a + t * (g.is_ray ? g.b : g.b - g.a);
      }
      z = base + Point2{small(), small()};
    } else {
      z = {box_coord(xlo, xhi), box_coord(ylo, yhi)};
    }
    if (membership(k, z) != membership(a, z)) {
      ++rep.disagreements;
      if (!rep.first_disagreement) rep.first_disagreement = z;
    }
  }
  return rep;
}

Demo3Report demo_3d(const std::vector<Rational>& params) {
  if (params.size() < 10)
    throw std::invalid_argument("at least 10 arc parameters required");
  Demo3Report rep;
  std::vector<Point3> arc;
  for (const Rational& t : params) {
    if (t <= 0 || t > 1)
      throw std::invalid_argument("arc parameter outside (0,1]");
    if (t == 1) {
      // (0,0,1) is the limit of the arc, not a point of it.
      rep.limit_param_seen = true;
      continue;
    }
    const Point2 p = circle_point(t);
    Arc3Sample s;
    s.t = t;
    s.a = {p.x, Rational(0), p.y};
    s.on_circle = (p.x * p.x + p.y * p.y == 1) && p.x > 0 && p.y > 0;
    rep.samples.push_back(s);
    arc.push_back(s.a);
  }
  if (rep.samples.size() < 10)
    throw std::invalid_argument("at least 10 arc parameters required");

  const Point3 origin{Rational(0), Rational(0), Rational(0)};
  const Point3 apex{Rational(0), Rational(1), Rational(1)};

  rep.all_on_circle = true;
  rep.all_forced = true;
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    Arc3Sample& s = rep.samples[i];
    rep.all_on_circle = rep.all_on_circle && s.on_circle;
    // Support functional f = a: every generator has <g,f> <= 1 with
    // equality exactly at a, so K meets a + [0,inf)^3 only at a and any
    // center of K must contain a.
    const Point3& f = s.a;
    bool ok = dot3(origin, f) < 1 && dot3(apex, f) < 1 && dot3(s.a, f) == 1;
    for (std::size_t j = 0; ok && j < arc.size(); ++j) {
      if (j == i) continue;
      ok = dot3(arc[j], f) < 1;
    }
    s.forced_point = ok;
    rep.all_forced = rep.all_forced && ok;
  }

  // Support functional (0,-1,1): strictly below 1 on every generator, so
  // the arc limit (0,0,1), where it equals 1, lies outside K.
  const Point3 f2{Rational(0), Rational(-1), Rational(1)};
  bool excl = dot3(origin, f2) < 1 && dot3(apex, f2) < 1;
  for (const Point3& g : arc) excl = excl && dot3(g, f2) < 1;
  const Point3 limit{Rational(0), Rational(0), Rational(1)};
  excl = excl && dot3(limit, f2) == 1;
  rep.limit_excluded = excl;

  rep.notes.push_back(
      "every center must contain each arc point, but their q^s-limit "
      "(0,0,1) is outside K, so K admits no q^s-compact center");
  rep.notes.push_back(
      "K itself is q-compact: any open set containing (0,1,1) absorbs "
      "(0,1,1)+theta_0, and the q^s-closure of K is closed and bounded");
  return rep;
}

}  // namespace asymlat
