#include "asymlat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace asymlat {

namespace {

constexpr double kInnerW = 640.0;
constexpr double kInnerH = 480.0;
constexpr double kPad = 20.0;

double to_d(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

std::string fmt(double v) {
  char buf[48];
  // normalize -0.0000 so equal inputs cannot differ in sign of zero
  if (std::abs(v) < 5e-5) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Mapper {
  double xmin, ymin, xmax, ymax, scale, w, h;

  explicit Mapper(const Viewport& vp) {
    xmin = to_d(vp.xmin);
    ymin = to_d(vp.ymin);
    xmax = to_d(vp.xmax);
    ymax = to_d(vp.ymax);
    scale = std::min(kInnerW / (xmax - xmin), kInnerH / (ymax - ymin));
    w = (xmax - xmin) * scale + 2 * kPad;
    h = (ymax - ymin) * scale + 2 * kPad;
  }
  double px(double x) const { return kPad + (x - xmin) * scale; }
  double py(double y) const { return h - kPad - (y - ymin) * scale; }
  double px(const Point2& p) const { return px(to_d(p.x)); }
  double py(const Point2& p) const { return py(to_d(p.y)); }
};

// Parameter at which the ray a + t*d leaves the viewport rectangle.
double exit_param(const Mapper& m, const Point2& a, const Point2& d) {
  const double ax = to_d(a.x), ay = to_d(a.y);
  const double dx = to_d(d.x), dy = to_d(d.y);
  double t = 1e18;
  if (dx > 0) t = std::min(t, (m.xmax - ax) / dx);
  if (dx < 0) t = std::min(t, (m.xmin - ax) / dx);
  if (dy > 0) t = std::min(t, (m.ymax - ay) / dy);
  if (dy < 0) t = std::min(t, (m.ymin - ay) / dy);
  return std::max(t, 0.0);
}

void line(std::ostringstream& o, const Mapper& m, const Point2& a,
          const Point2& b, const char* stroke, double width, bool dashed) {
  o << "  <line x1=\"" << fmt(m.px(a)) << "\" y1=\"" << fmt(m.py(a))
    << "\" x2=\"" << fmt(m.px(b)) << "\" y2=\"" << fmt(m.py(b))
    << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\"";
  if (dashed) o << " stroke-dasharray=\"6 4\"";
  o << "/>\n";
}

void arrowhead(std::ostringstream& o, const Mapper& m, const Point2& tip,
               const Point2& dir, const char* color) {
  const double tx = m.px(tip), ty = m.py(tip);
  double dx = to_d(dir.x) * m.scale, dy = -to_d(dir.y) * m.scale;
  const double len = std::hypot(dx, dy);
  if (len == 0) return;
  dx /= len;
  dy /= len;
  const double s = 8.0;
  const double lx = tx - s * dx + 0.5 * s * dy;
  const double ly = ty - s * dy - 0.5 * s * dx;
  const double rx = tx - s * dx - 0.5 * s * dy;
  const double ry = ty - s * dy + 0.5 * s * dx;
  o << "  <polygon points=\"" << fmt(tx) << "," << fmt(ty) << " " << fmt(lx)
    << "," << fmt(ly) << " " << fmt(rx) << "," << fmt(ry) << "\" fill=\""
    << color << "\"/>\n";
}

void ray(std::ostringstream& o, const Mapper& m, const Point2& a,
         const Point2& d, const char* stroke, double width, bool dashed) {
  const double t = exit_param(m, a, d);
  if (t <= 0) return;
  // quantized so the drawn tip is an exact rational point
  const Point2 tip = a + rat(std::llround(t * 4096.0), 4096) * d;
  line(o, m, a, tip, stroke, width, dashed);
  arrowhead(o, m, tip, d, stroke);
}

void region_fill(std::ostringstream& o, const Mapper& m,
                 const ClosedPoly2& closure, const Viewport& vp,
                 const char* fill, const char* opacity) {
  std::optional<ClosedPoly2> c = closure;
  const HalfPlane bounds[4] = {
      {Rational(1), Rational(0), vp.xmin},
      {Rational(-1), Rational(0), -vp.xmax},
      {Rational(0), Rational(1), vp.ymin},
      {Rational(0), Rational(-1), -vp.ymax},
  };
  for (const HalfPlane& h : bounds) {
    if (!c) return;
    c = clip_closure(*c, h);
  }
  if (!c || c->dim() < 2 || !c->cyclic) return;
  o << "  <polygon points=\"";
  for (std::size_t i = 0; i < c->verts.size(); ++i) {
    if (i) o << " ";
    o << fmt(m.px(c->verts[i])) << "," << fmt(m.py(c->verts[i]));
  }
  o << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity
    << "\" stroke=\"none\"/>\n";
}

void boundary(std::ostringstream& o, const Mapper& m, const FlaggedBody2& k,
              const char* color, double width) {
  const ClosedPoly2& c = k.closure;
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    const EdgeGeom g = edge_geom(c, e);
    const bool dashed = !k.eflags[e];
    if (g.is_ray)
      ray(o, m, g.a, g.b, color, width, dashed);
    else
      line(o, m, g.a, g.b, color, width, dashed);
  }
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    o << "  <circle cx=\"" << fmt(m.px(c.verts[i])) << "\" cy=\""
      << fmt(m.py(c.verts[i])) << "\" r=\"4.0\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" fill=\""
      << (k.vflags[i] ? color : "#ffffff") << "\"/>\n";
  }
}

}  // namespace

Viewport default_viewport(const FlaggedBody2& k) {
  const ClosedPoly2& c = k.closure;
  Rational xmin = c.verts[0].x, xmax = xmin;
  Rational ymin = c.verts[0].y, ymax = ymin;
  auto take = [&](const Point2& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  };
  for (const Point2& p : c.verts) take(p);
  // Fixed-length extension so rays get a visible run before the border.
  const Rational ray_len(2);
  auto take_ray = [&](const std::optional<Point2>& d, const Point2& base) {
    if (!d) return;
    Rational mag = d->x < 0 ? -d->x : d->x;
    const Rational my = d->y < 0 ? -d->y : d->y;
    if (my > mag) mag = my;
    take(base + Rational(ray_len / mag) * (*d));
  };
  if (!c.cyclic && !c.verts.empty()) {
    take_ray(c.ray_in, c.verts.front());
    take_ray(c.ray_out, c.verts.back());
  }
  Rational dx = xmax - xmin, dy = ymax - ymin;
  if (dx == 0) dx = 1;
  if (dy == 0) dy = 1;
  const Rational q(1, 4);
  return {xmin - q * dx, ymin - q * dy, xmax + q * dx, ymax + q * dy};
}

std::string render_svg(const FlaggedBody2& k,
                       const std::optional<Landmarks>& lm,
                       const std::optional<Viewport>& vp_in) {
  const FlaggedBody2 b = canonicalize(k);
  const Viewport vp = vp_in ? *vp_in : default_viewport(b);
  const Mapper m(vp);

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << fmt(m.w) << "\" height=\"" << fmt(m.h) << "\" viewBox=\"0 0 "
    << fmt(m.w) << " " << fmt(m.h) << "\">\n";
  o << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(m.w) << "\" height=\""
    << fmt(m.h) << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";

  if (b.closure.dim() == 2)
    region_fill(o, m, b.closure, vp, "#7aa6d9", "0.35");

  if (lm) {
    region_fill(o, m, lm->delta.closure, vp, "#e8a33d", "0.45");
    // chord line across the viewport
    const HalfPlane& h = lm->h_line;
    std::optional<Point2> p1, p2;
    auto try_edge = [&](const Point2& a, const Point2& bb) {
      const Rational fa = h.eval(a), fb = h.eval(bb);
      if (fa == fb) return;
      const Rational t = fa / (fa - fb);
      if (t < 0 || t > 1) return;
      const Point2 z = a + t * (bb - a);
      if (!p1)
        p1 = z;
      else if (!(z == *p1) && !p2)
        p2 = z;
    };
    const Point2 c1{vp.xmin, vp.ymin}, c2{vp.xmax, vp.ymin};
    const Point2 c3{vp.xmax, vp.ymax}, c4{vp.xmin, vp.ymax};
    try_edge(c1, c2);
    try_edge(c2, c3);
    try_edge(c3, c4);
    try_edge(c4, c1);
    if (p1 && p2) line(o, m, *p1, *p2, "#888888", 1.0, true);
    // arc F
    for (std::size_t i = 0; i + 1 < lm->f_chain.size(); ++i)
      line(o, m, lm->f_chain[i], lm->f_chain[i + 1], "#2e8b57", 3.0, false);
    // center R
    boundary(o, m, lm->r, "#7b3fa0", 2.5);
    // corner cones
    const Point2 down{Rational(0), Rational(-1)};
    const Point2 left_dir{Rational(-1), Rational(0)};
    for (const Point2& corner :
         {lm->f_chain.front(), lm->f_chain.back()}) {
      ray(o, m, corner, down, "#b05050", 1.0, true);
      ray(o, m, corner, left_dir, "#b05050", 1.0, true);
    }
  }

  boundary(o, m, b, "#1f3a64", 2.0);
  o << "</svg>\n";
  return o.str();
}

}  // namespace asymlat
