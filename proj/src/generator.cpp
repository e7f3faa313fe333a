#include "asymlat/generator.hpp"

#include <cassert>
#include <random>

namespace asymlat {

namespace {

// Maximum-score contiguous window over +1 (wanted included) / -1 (wanted
// excluded); the empty window scores 0. Ties prefer the longer window.
std::pair<std::size_t, std::size_t> best_window(const std::vector<bool>& want) {
  long best = 0;
  std::size_t bl = 0, br = 0;
  long run = 0;
  std::size_t rl = 0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (run <= 0) {
      run = 0;
      rl = i;
    }
    run += want[i] ? 1 : -1;
    if (run > best || (run == best && i + 1 - rl > br - bl)) {
      best = run;
      bl = rl;
      br = i + 1;
    }
  }
  return {bl, br};
}

}  // namespace

FlaggedBody2 repair_flags(FlaggedBody2 k) {
  const ClosedPoly2& c = k.closure;
  k.vflags.resize(c.verts.size());
  k.eflags.resize(c.edge_count());

  std::vector<bool> vkeep(c.verts.size(), true);
  std::vector<bool> ekeep(c.edge_count(), false);
  for (const auto& chain : collinear_chains(c)) {
    std::vector<bool> want;
    want.reserve(chain.size());
    for (const FaceRef& f : chain)
      want.push_back(f.is_vertex ? k.vflags[f.index] : k.eflags[f.index]);
    const auto [l, r] = best_window(want);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const bool in = (i >= l && i < r);
      if (chain[i].is_vertex) {
        // Shared corner vertices must be kept by both of their chains.
        vkeep[chain[i].index] = vkeep[chain[i].index] && in;
      } else {
        ekeep[chain[i].index] = in;
      }
    }
  }
  k.vflags = vkeep;
  k.eflags = ekeep;

  if (c.dim() < 2) {
    bool any = false;
    for (bool b : k.vflags) any = any || b;
    for (bool b : k.eflags) any = any || b;
    if (!any) {
      k.vflags.assign(c.verts.size(), true);
      k.eflags.assign(c.edge_count(), true);
    }
  }
  assert(validate(k));
  return k;
}

namespace {

using Rng = std::mt19937_64;

long pick(Rng& rng, long lo, long hi) {  // inclusive
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational rnd_scalar(Rng& rng) { return rat(pick(rng, -12, 12), pick(rng, 1, 4)); }

Point2 rnd_point(Rng& rng) { return {rnd_scalar(rng), rnd_scalar(rng)}; }

bool coin(Rng& rng) { return rng() % 2 == 0; }

std::vector<bool> rnd_flags(Rng& rng, std::size_t n) {
  std::vector<bool> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = coin(rng);
  return f;
}

FlaggedBody2 rnd_segment(Rng& rng) {
  Point2 a = rnd_point(rng);
  Point2 b = rnd_point(rng);
  while (b == a) b = rnd_point(rng);
  FlaggedBody2 k = segment_body(a, b, coin(rng), coin(rng), coin(rng));
  return repair_flags(std::move(k));
}

FlaggedBody2 rnd_polygon(Rng& rng) {
  std::vector<Point2> pts;
  const long n = pick(rng, 3, 7);
  for (long i = 0; i < n; ++i) pts.push_back(rnd_point(rng));
  return closed_hull_body(pts);
}

ExtendedScalar rnd_end(Rng& rng, const Rational& top) {
  if (rng() % 3 == 0) return ExtendedScalar::neg_infinity();
  return ExtendedScalar(top - rat(pick(rng, 0, 6), pick(rng, 1, 2)));
}

Decomposition rnd_certificate(Rng& rng) {
  Decomposition d;
  if (coin(rng)) {
    const Point2 apex = rnd_point(rng);
    d.form = Decomposition::Case1{apex, rnd_end(rng, apex.x),
                                  rnd_end(rng, apex.y), coin(rng), coin(rng)};
    return d;
  }
  const Rational alpha = rnd_scalar(rng);
  const Rational beta = rnd_scalar(rng);
  const Rational u = alpha + rat(pick(rng, 1, 8), pick(rng, 1, 2));
  const Rational v = beta + rat(pick(rng, 1, 8), pick(rng, 1, 2));
  std::vector<Point2> core = {{alpha, beta}, {alpha, v}, {u, beta}};
  const long extra = pick(rng, 0, 3);
  for (long i = 0; i < extra; ++i) {
    const Rational fx = rat(pick(rng, 0, 4), 4);
    const Rational fy = rat(pick(rng, 0, 4), 4);
    core.push_back({alpha + fx * (u - alpha), beta + fy * (v - beta)});
  }
  if (rng() % 4 == 0) core.push_back({u, v});
  d.form = Decomposition::Case2{closed_hull_body(core),
                                alpha,
                                beta,
                                u,
                                v,
                                rnd_end(rng, alpha),
                                rnd_end(rng, beta),
                                coin(rng),
                                coin(rng)};
  return d;
}

FlaggedBody2 rnd_theta0_body(Rng& rng) {
  std::vector<Point2> pts;
  const long n = pick(rng, 2, 6);
  for (long i = 0; i < n; ++i) pts.push_back(rnd_point(rng));
  ClosedPoly2 c = saturated_hull(pts);
  c = insert_boundary_points(c, pts);
  FlaggedBody2 k{c, rnd_flags(rng, c.verts.size()),
                 rnd_flags(rng, c.edge_count())};
  return repair_flags(std::move(k));
}

FlaggedBody2 rnd_spoiled(Rng& rng) {
  FlaggedBody2 k = assemble(rnd_certificate(rng));
  const std::size_t faces = k.vflags.size() + k.eflags.size();
  const std::size_t f = rng() % faces;
  if (f < k.vflags.size())
    k.vflags[f] = !k.vflags[f];
  else
    k.eflags[f - k.vflags.size()] = !k.eflags[f - k.vflags.size()];
  return repair_flags(std::move(k));
}

}  // namespace

std::vector<FlaggedBody2> generate_bodies(std::uint64_t seed,
                                          std::size_t count) {
  Rng rng(seed);
  std::vector<FlaggedBody2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 6) {
      case 0:
        out.push_back(point_body(rnd_point(rng)));
        break;
      case 1:
        out.push_back(rnd_segment(rng));
        break;
      case 2:
        out.push_back(rnd_polygon(rng));
        break;
      case 3:
        out.push_back(assemble(rnd_certificate(rng)));
        break;
      case 4:
        out.push_back(rnd_theta0_body(rng));
        break;
      default:
        out.push_back(rnd_spoiled(rng));
        break;
    }
    assert(validate(out.back()));
  }
  return out;
}

std::vector<FlaggedBody2> generate_bounded_sets(std::uint64_t seed,
                                                std::size_t count) {
  Rng rng(seed);
  std::vector<FlaggedBody2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 3) {
      case 0:
        out.push_back(point_body(rnd_point(rng)));
        break;
      case 1:
        out.push_back(rnd_segment(rng));
        break;
      default:
        out.push_back(rnd_polygon(rng));
        break;
    }
  }
  return out;
}

}  // namespace asymlat
