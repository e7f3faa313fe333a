// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact; the only randomness is seeded.
#include <chrono>
#include <cstdio>
#include <random>

#include "asymlat/generator.hpp"
#include "asymlat/norm.hpp"
#include "asymlat/oracle.hpp"

using namespace asymlat;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds = -1.0) {
  if (!ok) ++failures;
  if (seconds >= 0)
    std::printf("%s - %s (%.1f s)\n", ok ? "PASS" : "FAIL", name, seconds);
  else
    std::printf("%s - %s\n", ok ? "PASS" : "FAIL", name);
  std::fflush(stdout);
}

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Rational rnd_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 2001) - 1000;
  const long den = static_cast<long>(rng() % 50) + 1;
  return rat(num, den);
}

struct Decided {
  FlaggedBody2 k;
  Verdict v;
  FlaggedBody2 b;  // the body the verdict speaks about
};

}  // namespace

int main() {
  const std::size_t corpus_size = 1000;
  const auto corpus = generate_bodies(2024, corpus_size);
  std::vector<Decided> decided;
  decided.reserve(corpus.size());
  for (const FlaggedBody2& k : corpus) {
    Verdict v = decide(k);
    FlaggedBody2 b = v.decided_body ? *v.decided_body : canonicalize(k);
    decided.push_back({k, std::move(v), std::move(b)});
  }

  // 1. Decomposition round-trip and validated non-compactness witnesses.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    bool ok = decided.size() >= 1000;
    for (const Decided& d : decided) {
      if (d.v.kind == Verdict::Kind::QCompact) {
        ok = ok && d.v.decomposition &&
             canonical_equal(d.b, assemble(*d.v.decomposition));
      } else if (d.v.kind == Verdict::Kind::NotQCompact) {
        ok = ok && d.v.witness &&
             d.v.witness->family != CoverWitness::Family::Condition;
        if (!ok) break;
        for (int trial = 0; trial < 5 && ok; ++trial) {
          std::vector<Rational> ts;
          Rational tmin;
          const std::size_t n = 1 + rng() % 4;
          for (std::size_t i = 0; i < n; ++i) {
            ts.push_back(rat(static_cast<long>(rng() % 32) + 1, 8));
            if (i == 0 || ts.back() < tmin) tmin = ts.back();
          }
          try {
            const Point2 p = uncovered_point(*d.v.witness, d.k, ts);
            const bool xa = d.v.witness->family == CoverWitness::Family::U;
            const Rational pc = xa ? p.x : p.y;
            const Rational ac =
                xa ? d.v.witness->anchor.x : d.v.witness->anchor.y;
            ok = ok && membership(d.k, p) && pc >= ac - tmin / 2;
          } catch (const std::exception&) {
            ok = false;
          }
        }
      } else {
        ok = false;
      }
      if (!ok) break;
    }
    const double t = secs_since(t0);
    report("decomposition round-trip and cover witnesses on 1000 bodies",
           ok && t < 60.0, t);
  }

  // 2. Verdict equals the conjunction of the independent oracle checks.
  {
    bool ok = true;
    for (const Decided& d : decided) {
      bool conj = true;
      try {
        const Extrema e = compute_extrema(d.b);
        const Landmarks lm = compute_landmarks(d.b, e);
        conj = proj_sup_check(d.b, 1) && proj_sup_check(d.b, 2) &&
               membership(d.b, e.corner_right()) &&
               membership(d.b, e.corner_left()) && f_arc_check(d.b, lm) &&
               cone_hull_check(d.b, e);
      } catch (const std::domain_error&) {
        conj = false;
      }
      if (conj && d.v.kind == Verdict::Kind::QCompact)
        conj = cross_check(d.b, *d.v.decomposition, 10000, 99).disagreements ==
               0;
      ok = ok && (conj == (d.v.kind == Verdict::Kind::QCompact));
      if (!ok) break;
    }
    report("analyzer verdict equals the independent oracle conjunction", ok);
  }

  // 3. Strong compactness: center sandwich, bounded, fully closed.
  {
    bool ok = true;
    for (const Decided& d : decided) {
      if (d.v.kind != Verdict::Kind::QCompact) continue;
      const FlaggedBody2& c = *d.v.center;
      bool closed = recession_dirs(c.closure).empty();
      for (bool f : c.vflags) closed = closed && f;
      for (bool f : c.eflags) closed = closed && f;
      ok = ok && closed && body_subset(c, d.k) && body_subset(d.k, saturate(c));
      if (!ok) break;
    }
    report("strongly compact centers satisfy the exact sandwich", ok);
  }

  // 4. Saturation equivalence, corpus plus 200 bounded convex sets.
  {
    bool ok = true;
    auto extended = corpus;
    for (auto& k : generate_bounded_sets(7, 200)) extended.push_back(k);
    for (const FlaggedBody2& k : extended) {
      const bool a = decide(k).kind == Verdict::Kind::QCompact;
      const bool b = decide(saturate(k)).kind == Verdict::Kind::QCompact;
      ok = ok && a == b;
      if (!ok) break;
    }
    report("compactness is invariant under saturation", ok);
  }

  // 5. The single-corner family returns its exact parameters.
  {
    bool ok = true;
    for (bool bi : {false, true})
      for (bool li : {false, true}) {
        for (const auto& [s0, t0] :
             {std::pair{ExtendedScalar(rat(-1)), ExtendedScalar(rat(-2))},
              std::pair{ExtendedScalar::neg_infinity(),
                        ExtendedScalar::neg_infinity()}}) {
          Decomposition d;
          d.form = Decomposition::Case1{{rat(0), rat(0)}, s0, t0, li, bi};
          const Verdict v = decide(assemble(d));
          ok = ok && v.kind == Verdict::Kind::QCompact &&
               v.decomposition->is_case1();
          if (!ok) break;
          const auto& c1 = std::get<Decomposition::Case1>(v.decomposition->form);
          ok = ok && c1.apex == Point2{rat(0), rat(0)} && c1.s0 == s0 &&
               c1.t0 == t0;
          if (!s0.is_neg_infinity()) ok = ok && c1.left_end_included == li;
          if (!t0.is_neg_infinity()) ok = ok && c1.bottom_end_included == bi;
        }
        if (!ok) break;
      }
    report("single-corner decompositions round-trip exactly", ok);
  }

  // 6. Right-boundedness identity under all three norm variants.
  {
    const std::vector<AsymNorm2> norms = {
        make_asym(make_weighted_l1(rat(1), rat(2))),
        make_asym(make_weighted_linf(rat(3), rat(1, 2))),
        make_asym(make_polygonal({{rat(2), rat(0)},
                                  {rat(1), rat(1)},
                                  {rat(-1), rat(1)},
                                  {rat(-2), rat(0)},
                                  {rat(-1), rat(-1)},
                                  {rat(1), rat(-1)}}))};
    std::mt19937_64 rng(6);
    bool ok = true;
    for (int i = 0; i < 100000 && ok; ++i) {
      const Point2 w{rnd_rational(rng), rnd_rational(rng)};
      for (const AsymNorm2& n : norms)
        ok = ok && q_of(n, w) == qs_of(n, pos_part(w));
    }
    report("q(w) = q^s(w v 0) for 100000 random points, three norms", ok);
  }

  // 7. Three-dimensional counterexample with 100 arc samples.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Rational> params;
    for (long i = 1; i <= 100; ++i) params.push_back(rat(i, 101));
    bool ok = false;
    try {
      const Demo3Report r = demo_3d(params);
      ok = r.samples.size() == 100 && r.all_on_circle && r.all_forced &&
           r.limit_excluded;
    } catch (const std::exception&) {
      ok = false;
    }
    const double t = secs_since(t0);
    report("dimension-3 demo: forced arc points, excluded limit",
           ok && t < 10.0, t);
  }

  // 8. Norm axioms and solidity, 100000 random cases each.
  {
    const std::vector<AsymNorm2> norms = {
        make_asym(make_weighted_l1(rat(2), rat(1))),
        make_asym(make_weighted_linf(rat(1), rat(3))),
        make_asym(make_polygonal({{rat(2), rat(0)},
                                  {rat(0), rat(1)},
                                  {rat(-2), rat(0)},
                                  {rat(0), rat(-1)}}))};
    std::mt19937_64 rng(8);
    bool homogeneity = true, triangle = true, separation = true,
         solidity = true;
    for (int i = 0; i < 100000; ++i) {
      const AsymNorm2& n = norms[i % norms.size()];
      const Point2 v{rnd_rational(rng), rnd_rational(rng)};
      const Point2 w{rnd_rational(rng), rnd_rational(rng)};
      const Rational a = rat(static_cast<long>(rng() % 64), 8);
      homogeneity = homogeneity && q_of(n, a * v) == a * q_of(n, v);
      triangle = triangle && q_of(n, v + w) <= q_of(n, v) + q_of(n, w);
      if (q_of(n, v) == 0 && q_of(n, -v) == 0)
        separation = separation && v == Point2{rat(0), rat(0)};
      // solidity criterion: the norm is monotone on dominated magnitudes
      const Point2 lo = pos_part(v);
      const Point2 hi = lo + pos_part(w);
      solidity = solidity && norm_of(n.base, lo) <= norm_of(n.base, hi);
      if (!(homogeneity && triangle && separation && solidity)) break;
    }
    const bool sheared_rejected = !solidity_check(make_polygonal(
        {{rat(2), rat(1)}, {rat(-1), rat(1)}, {rat(-2), rat(-1)}, {rat(1), rat(-1)}}));
    report("norm axioms and the solidity criterion on 100000 cases",
           homogeneity && triangle && separation && solidity &&
               sheared_rejected);
  }

  return failures == 0 ? 0 : 1;
}
