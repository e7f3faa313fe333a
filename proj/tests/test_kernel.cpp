#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "asymlat/point.hpp"
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

}  // namespace

TEST_CASE("rational construction and parsing") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, 4) == rat(-1, 2));
  CHECK(to_string(rat(3, 4)) == "3/4");
  CHECK(to_string(rat(-5, 1)) == "-5");
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-7") == rat(-7, 1));
  CHECK(parse_rational("6/8") == rat(3, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("extended scalar orders negative infinity below everything") {
  const ExtendedScalar ninf = ExtendedScalar::neg_infinity();
  CHECK(ninf.is_neg_infinity());
  CHECK(ninf < ExtendedScalar(rat(-1000000, 1)));
  CHECK(ninf <= ninf);
  CHECK(ninf == ExtendedScalar::neg_infinity());
  CHECK(ExtendedScalar(rat(1, 2)) < ExtendedScalar(rat(2, 3)));
  CHECK(to_string(ninf) == "-inf");
  CHECK(parse_extended("-inf").is_neg_infinity());
  CHECK(parse_extended("3/4") == ExtendedScalar(rat(3, 4)));
  CHECK_THROWS(ninf.finite());
}

TEST_CASE("pos_part") {
  CHECK(pos_part({rat(2), rat(-3)}) == (Point2{rat(2), rat(0)}));
  CHECK(pos_part({rat(0), rat(0)}) == (Point2{rat(0), rat(0)}));
  CHECK(pos_part({rat(-1, 2), rat(-7)}) == (Point2{rat(0), rat(0)}));
}

TEST_CASE("pos_part is idempotent") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const Point2 v = rnd_point(rng);
    CHECK(pos_part(pos_part(v)) == pos_part(v));
  }
}

TEST_CASE("dominates") {
  CHECK(dominates({rat(-1), rat(-2)}, {rat(0), rat(0)}));
  CHECK_FALSE(dominates({rat(1), rat(0)}, {rat(0), rat(1)}));
  CHECK(dominates({rat(1, 3), rat(1, 3)}, {rat(1, 3), rat(1, 2)}));
}

TEST_CASE("dominates is a partial order") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 2000; ++i) {
    const Point2 a = rnd_point(rng);
    const Point2 b = rnd_point(rng);
    const Point2 c = rnd_point(rng);
    CHECK(dominates(a, a));
    if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("circle_point hits the unit circle exactly") {
  CHECK(circle_point(rat(1)) == (Point2{rat(0), rat(1)}));
  CHECK(circle_point(rat(1, 2)) == (Point2{rat(3, 5), rat(4, 5)}));
  CHECK(circle_point(rat(1, 3)) == (Point2{rat(4, 5), rat(3, 5)}));
  CHECK_THROWS(circle_point(rat(0)));
  CHECK_THROWS(circle_point(rat(-1, 2)));
  CHECK_THROWS(circle_point(rat(3, 2)));
}

TEST_CASE("circle_point identity for random parameters") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 2000; ++i) {
    const long den = static_cast<long>(rng() % 1000) + 1;
    const long num = static_cast<long>(rng() % den) + 1;
    const Point2 p = circle_point(rat(num, den));
    CHECK(p.x * p.x + p.y * p.y == 1);
    CHECK(p.x >= 0);
    CHECK(p.x < 1);
  }
}
