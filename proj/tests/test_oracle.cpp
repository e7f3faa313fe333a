#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "asymlat/generator.hpp"
#include "asymlat/oracle.hpp"
#include "doctest.h"

using namespace asymlat;

namespace {

FlaggedBody2 std_body() {
  ClosedPoly2 c;
  c.verts = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  c.ray_in = Point2{rat(0), rat(-1)};
  c.ray_out = Point2{rat(-1), rat(0)};
  return {c, {true, true}, {true, true, true}};
}

FlaggedBody2 corner_excluded_body() {
  FlaggedBody2 k = std_body();
  k.vflags[0] = false;
  k.eflags[0] = false;
  return k;
}

FlaggedBody2 two_edge_body(bool middle_included) {
  ClosedPoly2 c;
  c.verts = {{rat(2), rat(0)}, {rat(1), rat(1)}, {rat(-1), rat(2)}};
  c.ray_in = Point2{rat(0), rat(-1)};
  c.ray_out = Point2{rat(-1), rat(0)};
  return {c, {true, middle_included, true}, {true, true, true, true}};
}

}  // namespace

TEST_CASE("projection supremum check") {
  CHECK(proj_sup_check(std_body(), 1));
  CHECK(proj_sup_check(std_body(), 2));
  CHECK_FALSE(proj_sup_check(corner_excluded_body(), 1));
  CHECK(proj_sup_check(point_body({rat(5), rat(5)}), 2));

  ClosedPoly2 c;
  c.verts = {{rat(0), rat(0)}};
  c.ray_in = Point2{rat(0), rat(-1)};
  c.ray_out = Point2{rat(0), rat(1)};
  const FlaggedBody2 line{c, {true}, {true, true}};
  CHECK_THROWS_AS(proj_sup_check(line, 2), std::domain_error);
}

TEST_CASE("boundary arc check") {
  {
    const FlaggedBody2 k = std_body();
    const Landmarks lm = compute_landmarks(k, compute_extrema(k));
    CHECK(f_arc_check(k, lm));
  }
  {
    // an arc endpoint missing from the set
    const FlaggedBody2 k = corner_excluded_body();
    const Landmarks lm = compute_landmarks(k, compute_extrema(k));
    CHECK_FALSE(f_arc_check(k, lm));
  }
  {
    // arc vertex (1,1) excluded on the two-edge upper chain
    const FlaggedBody2 k = two_edge_body(false);
    REQUIRE(validate(k));
    const Landmarks lm = compute_landmarks(k, compute_extrema(k));
    CHECK_FALSE(f_arc_check(k, lm));
    CHECK(decide(k).kind == Verdict::Kind::NotQCompact);
    CHECK(f_arc_check(two_edge_body(true),
                      compute_landmarks(two_edge_body(true),
                                        compute_extrema(two_edge_body(true)))));
  }
}

TEST_CASE("corner-ray hull check") {
  CHECK(cone_hull_check(std_body(), compute_extrema(std_body())));
  {
    // a missing corner breaks the hull containment
    const FlaggedBody2 k = corner_excluded_body();
    CHECK_FALSE(cone_hull_check(k, compute_extrema(k)));
  }
  {
    // coincident corners: vacuously true
    const FlaggedBody2 k = cone_body({rat(0), rat(0)});
    CHECK(cone_hull_check(k, compute_extrema(k)));
  }
}

TEST_CASE("uncovered points defeat every finite subfamily") {
  const FlaggedBody2 k = corner_excluded_body();
  const Verdict v = decide(k);
  REQUIRE(v.kind == Verdict::Kind::NotQCompact);
  REQUIRE(v.witness->family == CoverWitness::Family::U);

  {
    const Point2 p = uncovered_point(*v.witness, k, {rat(1, 2), rat(1, 4)});
    CHECK(membership(k, p));
    CHECK(p.x >= rat(7, 8));
  }
  {
    const Point2 p = uncovered_point(*v.witness, k, {rat(1)});
    CHECK(membership(k, p));
    CHECK(p.x >= rat(1, 2));
  }
  {
    // a fabricated anchor that belongs to the set is rejected
    CoverWitness fake = *v.witness;
    CHECK_THROWS_AS(uncovered_point(fake, std_body(), {rat(1)}),
                    WitnessInvalid);
  }
  CHECK_THROWS_AS(uncovered_point(*v.witness, k, {}), std::invalid_argument);
  CHECK_THROWS_AS(uncovered_point(*v.witness, k, {rat(-1)}),
                  std::invalid_argument);
}

TEST_CASE("membership cross-check between set and certificate") {
  {
    const Verdict v = decide(std_body());
    const CrossCheckReport r = cross_check(std_body(), *v.decomposition,
                                           10000, 7);
    CHECK(r.samples == 10000);
    CHECK(r.disagreements == 0);
  }
  {
    // body with a finite bottom end at (1,-1); flipping the certificate's
    // end-inclusion flag is caught by boundary-concentrated sampling
    ClosedPoly2 c;
    c.verts = {{rat(1), rat(-1)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
    c.ray_in = Point2{rat(0), rat(-1)};
    c.ray_out = Point2{rat(-1), rat(0)};
    const FlaggedBody2 k{c, {true, true, true}, {false, true, true, true}};
    REQUIRE(validate(k));
    const Verdict v = decide(k);
    REQUIRE(v.kind == Verdict::Kind::QCompact);
    Decomposition d = *v.decomposition;
    auto& c2 = std::get<Decomposition::Case2>(d.form);
    REQUIRE(c2.t0 == ExtendedScalar(rat(-1)));
    REQUIRE(c2.bottom_end_included);
    c2.bottom_end_included = false;
    const CrossCheckReport r = cross_check(k, d, 10000, 7);
    CHECK(r.disagreements > 0);
    REQUIRE(r.first_disagreement);
    CHECK(*r.first_disagreement == (Point2{rat(1), rat(-1)}));
  }
  {
    const FlaggedBody2 k = cone_body({rat(0), rat(0)});
    const Verdict v = decide(k);
    const CrossCheckReport r = cross_check(k, *v.decomposition, 2000, 11);
    CHECK(r.disagreements == 0);
  }
}

TEST_CASE("uncovered_point is total over random witnesses and subfamilies") {
  std::mt19937_64 rng(401);
  const auto corpus = generate_bodies(41, 180);
  for (const FlaggedBody2& k : corpus) {
    const Verdict v = decide(k);
    if (v.kind != Verdict::Kind::NotQCompact) continue;
    if (v.witness->family == CoverWitness::Family::Condition) continue;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> ts;
      const std::size_t n = 1 + rng() % 4;
      Rational tmin;
      for (std::size_t i = 0; i < n; ++i) {
        ts.push_back(rat(static_cast<long>(rng() % 32) + 1, 8));
        if (i == 0 || ts.back() < tmin) tmin = ts.back();
      }
      const Point2 p = uncovered_point(*v.witness, k, ts);
      CHECK(membership(k, p));
      const bool xa = v.witness->family == CoverWitness::Family::U;
      const Rational pc = xa ? p.x : p.y;
      const Rational ac = xa ? v.witness->anchor.x : v.witness->anchor.y;
      CHECK(pc >= ac - tmin / 2);
    }
  }
}

TEST_CASE("three-dimensional counterexample certificates") {
  // frozen samples
  {
    const Demo3Report r = demo_3d({rat(1, 2), rat(1, 3), rat(1), rat(1, 4),
                                   rat(2, 3), rat(3, 4), rat(1, 5), rat(2, 5),
                                   rat(3, 5), rat(4, 5), rat(5, 6)});
    CHECK(r.limit_param_seen);
    CHECK(r.samples.size() == 10);
    CHECK(r.all_on_circle);
    CHECK(r.all_forced);
    CHECK(r.limit_excluded);
    bool found_half = false;
    for (const Arc3Sample& s : r.samples)
      if (s.t == rat(1, 2)) {
        found_half = true;
        CHECK(s.a.x1 == rat(3, 5));
        CHECK(s.a.x3 == rat(4, 5));
        // <(0,1,1),(3/5,0,4/5)> = 4/5 < 1
        CHECK(s.a.x2 + s.a.x3 == rat(4, 5));
      }
    CHECK(found_half);
  }
  CHECK_THROWS_AS(demo_3d({rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(demo_3d({rat(3, 2), rat(1, 3), rat(1, 4), rat(1, 5),
                           rat(1, 6), rat(1, 7), rat(1, 8), rat(1, 9),
                           rat(1, 10), rat(1, 11)}),
                  std::invalid_argument);
}
