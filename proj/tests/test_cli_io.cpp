#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "asymlat/generator.hpp"
#include "asymlat/json_io.hpp"
#include "asymlat/svg.hpp"
#include "doctest.h"

using namespace asymlat;

namespace {

std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ASYMLAT_BIN) + " " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

FlaggedBody2 std_body() {
  ClosedPoly2 c;
  c.verts = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  c.ray_in = Point2{rat(0), rat(-1)};
  c.ray_out = Point2{rat(-1), rat(0)};
  return {c, {true, true}, {true, true, true}};
}

}  // namespace

TEST_CASE("body parsing round-trips through serialization") {
  const FlaggedBody2 k = parse_body_text(slurp(data_path("standard_body.json")));
  CHECK(validate(k));
  CHECK(canonical_equal(k, std_body()));

  const auto corpus = generate_bodies(51, 150);
  for (const FlaggedBody2& b : corpus) {
    const auto j = body_to_json(b);
    const FlaggedBody2 back = parse_body(j);
    CHECK(canonical_equal(b, back));
    // serialization is canonical: a second round trip is bit-identical
    CHECK(dump_json(body_to_json(back)) == dump_json(j));
  }
}

TEST_CASE("parse errors carry the reason") {
  CHECK_THROWS_AS(parse_body_text(slurp(data_path("bad_rational.json"))),
                  ParseError);
  CHECK_THROWS_AS(parse_body_text("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_body_text("{\"vertices\": []}"), ParseError);
  CHECK_THROWS_AS(parse_body_text(slurp(data_path("gapped_segment.json"))),
                  ValidationError);
}

TEST_CASE("norm descriptors") {
  const AsymNorm2 l1 = parse_norm_text(slurp(data_path("norm_weighted_l1.json")));
  CHECK(q_of(l1, {rat(1), rat(1, 2)}) == 2);
  CHECK_THROWS_AS(parse_norm_text(slurp(data_path("norm_sheared.json"))),
                  ValidationError);
  CHECK_THROWS_AS(parse_norm_text("{\"type\": \"euclidean\"}"), ParseError);
  const AsymNorm2 poly = parse_norm_text(
      "{\"type\": \"polygonal\", \"vertices\": [[\"1\",\"0\"],[\"0\",\"1\"],"
      "[\"-1\",\"0\"],[\"0\",\"-1\"]]}");
  CHECK(q_of(poly, {rat(1), rat(1)}) == 2);
}

TEST_CASE("svg rendering is deterministic and matches the goldens") {
  const FlaggedBody2 k = std_body();
  const Landmarks lm = compute_landmarks(k, compute_extrema(k));
  const std::string a = render_svg(k, lm);
  const std::string b = render_svg(k, lm);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a == slurp(data_path("standard_body.svg")));

  const FlaggedBody2 cone = cone_body({rat(0), rat(0)});
  const Landmarks clm = compute_landmarks(cone, compute_extrema(cone));
  CHECK(render_svg(cone, clm) == slurp(data_path("cone_body.svg")));

  // hollow endpoint marker for an excluded vertex
  const FlaggedBody2 half =
      parse_body_text(slurp(data_path("half_open_segment.json")));
  const std::string s = render_svg(half);
  CHECK(s.find("fill=\"#ffffff\"") != std::string::npos);
}

TEST_CASE("command line: analysis and certification") {
  CHECK(run_cli("analyze --input " + data_path("standard_body.json") +
                " --norm " + data_path("norm_weighted_l1.json") +
                " --output cli_analyze.json") == 0);
  const std::string rep = slurp("cli_analyze.json");
  CHECK(rep.find("\"Q_COMPACT\"") != std::string::npos);
  CHECK(rep.find("\"CASE2\"") != std::string::npos);

  CHECK(run_cli("decompose --input " + data_path("cone_body.json") +
                " --output cli_decompose.json") == 0);
  CHECK(slurp("cli_decompose.json").find("\"CASE1\"") != std::string::npos);

  CHECK(run_cli("certify --input " + data_path("excluded_vertex_body.json") +
                " --samples 500 --output cli_certify.json") == 0);
  const std::string cert = slurp("cli_certify.json");
  CHECK(cert.find("\"NOT_Q_COMPACT\"") != std::string::npos);
  CHECK(cert.find("\"U_FAMILY\"") != std::string::npos);
  std::size_t demos = 0;
  for (std::size_t p = cert.find("\"uncovered_point\"");
       p != std::string::npos; p = cert.find("\"uncovered_point\"", p + 1))
    ++demos;
  CHECK(demos == 3);

  CHECK(run_cli("certify --input " + data_path("standard_body.json") +
                " --samples 500 --output cli_certify2.json") == 0);
  CHECK(slurp("cli_certify2.json").find("\"disagreements\": 0") !=
        std::string::npos);
}

TEST_CASE("command line: rendering, generation, demo") {
  CHECK(run_cli("render --input " + data_path("standard_body.json") +
                " --output cli_render_a.svg") == 0);
  CHECK(run_cli("render --input " + data_path("standard_body.json") +
                " --output cli_render_b.svg") == 0);
  CHECK(slurp("cli_render_a.svg") == slurp("cli_render_b.svg"));
  CHECK(slurp("cli_render_a.svg").rfind("<svg", 0) == 0);

  CHECK(run_cli("gen --seed 5 --count 12 --output cli_gen_a.json") == 0);
  CHECK(run_cli("gen --seed 5 --count 12 --output cli_gen_b.json") == 0);
  CHECK(slurp("cli_gen_a.json") == slurp("cli_gen_b.json"));
  const auto doc = nlohmann::ordered_json::parse(slurp("cli_gen_a.json"));
  REQUIRE(doc.at("bodies").size() == 12);
  for (const auto& jb : doc.at("bodies")) CHECK(validate(parse_body(jb)));

  CHECK(run_cli("demo3d --count 16 --output cli_demo.json") == 0);
  const std::string demo = slurp("cli_demo.json");
  CHECK(demo.find("\"all_forced\": true") != std::string::npos);
  CHECK(demo.find("\"limit_excluded\": true") != std::string::npos);
}

TEST_CASE("command line: input failures exit with code 1") {
  CHECK(run_cli("analyze --input " + data_path("gapped_segment.json") +
                " --output cli_bad.json 2>/dev/null") == 1);
  CHECK(run_cli("analyze --input " + data_path("bad_rational.json") +
                " --output cli_bad.json 2>/dev/null") == 1);
  CHECK(run_cli("analyze --input no_such_file.json 2>/dev/null") == 1);
  CHECK(run_cli("demo3d --count 3 2>/dev/null") == 1);
}
