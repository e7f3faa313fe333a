#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "asymlat/norm.hpp"
#include "doctest.h"

using namespace asymlat;

namespace {

Rational rnd_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 201) - 100;
  const long den = static_cast<long>(rng() % 20) + 1;
  return rat(num, den);
}

Point2 rnd_point(std::mt19937_64& rng) {
  return {rnd_rational(rng), rnd_rational(rng)};
}

AsymNorm2 linf11() { return make_asym(make_weighted_linf(rat(1), rat(1))); }

std::vector<AsymNorm2> variants() {
  return {make_asym(make_weighted_l1(rat(1), rat(2))),
          make_asym(make_weighted_linf(rat(2), rat(1, 3))),
          make_asym(make_polygonal({{rat(2), rat(0)},
                                    {rat(1), rat(1)},
                                    {rat(-1), rat(1)},
                                    {rat(-2), rat(0)},
                                    {rat(-1), rat(-1)},
                                    {rat(1), rat(-1)}}))};
}

}  // namespace

TEST_CASE("q evaluation") {
  CHECK(q_of(linf11(), {rat(2), rat(-3)}) == 2);
  for (const AsymNorm2& n : variants())
    CHECK(q_of(n, {rat(-1), rat(-5)}) == 0);
  const AsymNorm2 l1 = make_asym(make_weighted_l1(rat(1), rat(2)));
  CHECK(q_of(l1, {rat(1), rat(1, 2)}) == 2);
}

TEST_CASE("q^s evaluation") {
  CHECK(qs_of(linf11(), {rat(2), rat(-3)}) == 3);
  for (const AsymNorm2& n : variants()) CHECK(qs_of(n, {rat(0), rat(0)}) == 0);
  const AsymNorm2 l1 = make_asym(make_weighted_l1(rat(1), rat(2)));
  CHECK(qs_of(l1, {rat(-1), rat(1, 2)}) == 1);
}

TEST_CASE("open ball membership") {
  const AsymNorm2 n = linf11();
  const Point2 o{rat(0), rat(0)};
  CHECK(ball_contains(n, BallKind::Q, o, rat(1), {rat(-100), rat(1, 2)}));
  CHECK_FALSE(
      ball_contains(n, BallKind::QS, o, rat(1), {rat(-100), rat(1, 2)}));
  CHECK_FALSE(ball_contains(n, BallKind::Q, o, rat(1), {rat(1), rat(0)}));
  CHECK_THROWS(ball_contains(n, BallKind::Q, o, rat(0), o));
  CHECK_THROWS(ball_contains(n, BallKind::Q, o, rat(-1), o));
}

TEST_CASE("solidity criterion") {
  CHECK(solidity_check(make_polygonal(
      {{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(-1), rat(0)}, {rat(0), rat(-1)}})));
  CHECK(solidity_check(make_polygonal({{rat(1), rat(1)},
                                       {rat(-1), rat(1)},
                                       {rat(-1), rat(-1)},
                                       {rat(1), rat(-1)}})));
  CHECK_FALSE(solidity_check(make_polygonal({{rat(2), rat(1)},
                                             {rat(-1), rat(1)},
                                             {rat(-2), rat(-1)},
                                             {rat(1), rat(-1)}})));
  // the asymmetric-norm wrapper refuses non-solid bases
  CHECK_THROWS(make_asym(make_polygonal({{rat(2), rat(1)},
                                         {rat(-1), rat(1)},
                                         {rat(-2), rat(-1)},
                                         {rat(1), rat(-1)}})));
}

TEST_CASE("polygonal construction rejects malformed unit balls") {
  // not symmetric under negation
  CHECK_THROWS(make_polygonal(
      {{rat(2), rat(0)}, {rat(0), rat(1)}, {rat(-1), rat(0)}, {rat(0), rat(-1)}}));
  // vertices not in convex position
  CHECK_THROWS(make_polygonal({{rat(1), rat(0)},
                               {rat(-1), rat(0)},
                               {rat(0), rat(1)},
                               {rat(0), rat(-1)}}));
  // weights must be positive
  CHECK_THROWS(make_weighted_l1(rat(0), rat(1)));
  CHECK_THROWS(make_weighted_linf(rat(1), rat(-2)));
}

TEST_CASE("asymmetric norm axioms hold on random inputs") {
  std::mt19937_64 rng(201);
  for (const AsymNorm2& n : variants()) {
    for (int i = 0; i < 1500; ++i) {
      const Point2 v = rnd_point(rng);
      const Point2 w = rnd_point(rng);
      const Rational a = rat(static_cast<long>(rng() % 40), 4);
      // positive homogeneity
      CHECK(q_of(n, a * v) == a * q_of(n, v));
      // triangle inequality
      CHECK(q_of(n, v + w) <= q_of(n, v) + q_of(n, w));
      // separation
      if (q_of(n, v) == 0 && q_of(n, -v) == 0)
        CHECK(v == Point2{rat(0), rat(0)});
      // monotonicity and the theta_0 identity
      if (dominates(v, w)) CHECK(q_of(n, v) <= q_of(n, w));
      CHECK((q_of(n, v) == 0) == dominates(v, {rat(0), rat(0)}));
      // q^s is the symmetrization
      const Rational qs = qs_of(n, v);
      CHECK(qs == (q_of(n, v) > q_of(n, -v) ? q_of(n, v) : q_of(n, -v)));
    }
  }
}

TEST_CASE("right-boundedness identity and norm equivalence") {
  std::mt19937_64 rng(202);
  const AsymNorm2 ninf = linf11();
  const AsymNorm2 n1 = make_asym(make_weighted_l1(rat(1), rat(1)));
  for (int i = 0; i < 3000; ++i) {
    const Point2 w = rnd_point(rng);
    for (const AsymNorm2& n : variants())
      CHECK(q_of(n, w) == qs_of(n, pos_part(w)));
    CHECK(q_of(ninf, w) <= q_of(n1, w));
    CHECK(q_of(n1, w) <= 2 * q_of(ninf, w));
  }
}
