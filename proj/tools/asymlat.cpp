#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "asymlat/generator.hpp"
#include "asymlat/json_io.hpp"
#include "asymlat/oracle.hpp"
#include "asymlat/svg.hpp"

namespace {

using asymlat::rat;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw asymlat::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw asymlat::ParseError("cannot open output file: " + path);
  out << text;
}

// Optional norm descriptor: validated (construction enforces solidity) and
// echoed into the report.
std::optional<json> load_norm(const std::string& path) {
  if (path.empty()) return std::nullopt;
  const std::string text = read_file(path);
  asymlat::parse_norm_text(text);
  return json::parse(text);
}

json analysis_report(const asymlat::FlaggedBody2& k) {
  json rep;
  rep["input"] = asymlat::body_to_json(k);
  const asymlat::Verdict v = asymlat::decide(k);
  if (v.kind != asymlat::Verdict::Kind::NotConvexInput &&
      asymlat::recession_in_theta0(asymlat::canonicalize(k).closure)) {
    const asymlat::FlaggedBody2 b =
        v.decided_body ? *v.decided_body : asymlat::canonicalize(k);
    const asymlat::Extrema e = asymlat::compute_extrema(b);
    rep["extrema"] = asymlat::extrema_to_json(e);
    rep["landmarks"] =
        asymlat::landmarks_to_json(asymlat::compute_landmarks(b, e));
  }
  rep.update(asymlat::verdict_to_json(v));
  return rep;
}

int run_analyze(const std::string& input, const std::string& norm,
                const std::string& output) {
  json rep = analysis_report(asymlat::parse_body_text(read_file(input)));
  if (auto n = load_norm(norm)) rep["norm"] = *n;
  write_output(output, asymlat::dump_json(rep));
  return 0;
}

int run_decompose(const std::string& input, const std::string& output) {
  const asymlat::FlaggedBody2 k =
      asymlat::parse_body_text(read_file(input));
  const asymlat::Verdict v = asymlat::decide(k);
  json rep;
  if (v.kind == asymlat::Verdict::Kind::QCompact) {
    rep = asymlat::decomposition_to_json(*v.decomposition);
  } else {
    rep["verdict"] = "NOT_Q_COMPACT";
    if (v.witness) rep["witness"] = asymlat::witness_to_json(*v.witness);
  }
  write_output(output, asymlat::dump_json(rep));
  return 0;
}

int run_certify(const std::string& input, const std::string& output,
                std::size_t samples) {
  const asymlat::FlaggedBody2 k =
      asymlat::parse_body_text(read_file(input));
  const asymlat::Verdict v = asymlat::decide(k);
  json rep = asymlat::verdict_to_json(v);

  const asymlat::FlaggedBody2 b =
      v.decided_body ? *v.decided_body : asymlat::canonicalize(k);
  json oracle;
  if (asymlat::recession_in_theta0(b.closure)) {
    const asymlat::Extrema e = asymlat::compute_extrema(b);
    const asymlat::Landmarks lm = asymlat::compute_landmarks(b, e);
    oracle["proj_sup_x"] = asymlat::proj_sup_check(b, 1);
    oracle["proj_sup_y"] = asymlat::proj_sup_check(b, 2);
    oracle["f_arc"] = asymlat::f_arc_check(b, lm);
    oracle["cone_hull"] = asymlat::cone_hull_check(b, e);
  } else {
    oracle["recession"] = false;
  }
  rep["oracle"] = oracle;

  if (v.kind == asymlat::Verdict::Kind::QCompact) {
    rep["cross_check"] = asymlat::cross_check_to_json(
        asymlat::cross_check(b, *v.decomposition, samples, 1));
  } else if (v.witness &&
             v.witness->family != asymlat::CoverWitness::Family::Condition) {
    // three constructive no-finite-subcover demonstrations
    const std::vector<std::vector<asymlat::Rational>> subfamilies = {
        {rat(1, 1)},
        {rat(1, 2), rat(2, 1)},
        {rat(1, 4), rat(3, 1), rat(5, 1)}};
    json demos = json::array();
    for (const auto& ts : subfamilies) {
      const asymlat::Point2 p = asymlat::uncovered_point(*v.witness, k, ts);
      json ts_json = json::array();
      for (const auto& t : ts) ts_json.push_back(asymlat::to_string(t));
      demos.push_back(json{{"parameters", ts_json},
                           {"uncovered_point", asymlat::point_to_json(p)}});
    }
    rep["uncovered_points"] = demos;
  }
  write_output(output, asymlat::dump_json(rep));
  return 0;
}

int run_render(const std::string& input, const std::string& output) {
  const asymlat::FlaggedBody2 k =
      asymlat::parse_body_text(read_file(input));
  std::optional<asymlat::Landmarks> lm;
  const asymlat::FlaggedBody2 b = asymlat::canonicalize(k);
  if (asymlat::recession_in_theta0(b.closure))
    lm = asymlat::compute_landmarks(b, asymlat::compute_extrema(b));
  write_output(output, asymlat::render_svg(k, lm));
  return 0;
}

int run_demo3d(const std::string& output, std::size_t count) {
  if (count < 10)
    throw std::invalid_argument("demo3d needs at least 10 arc samples");
  std::vector<asymlat::Rational> params;
  for (std::size_t i = 1; i <= count; ++i)
    params.push_back(rat(static_cast<long>(i), static_cast<long>(count + 1)));
  write_output(output,
               asymlat::dump_json(asymlat::demo3_to_json(
                   asymlat::demo_3d(params))));
  return 0;
}

int run_gen(const std::string& output, std::uint64_t seed,
            std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  json bodies = json::array();
  for (const asymlat::FlaggedBody2& k : asymlat::generate_bodies(seed, count))
    bodies.push_back(asymlat::body_to_json(k));
  json rep{{"seed", seed}, {"count", count}, {"bodies", bodies}};
  write_output(output, asymlat::dump_json(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of convex sets under the asymmetric "
               "lattice norm q(x) = ||x v 0||"};
  app.require_subcommand(1);

  std::string input, norm, output;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t samples = 10000;

  auto add_io = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("--input", input, "input body JSON")->required();
    sub->add_option("--output", output, "output path (default: stdout)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis report");
  add_io(analyze, true);
  analyze->add_option("--norm", norm, "norm descriptor JSON");

  CLI::App* decompose =
      app.add_subcommand("decompose", "decomposition certificate");
  add_io(decompose, true);

  CLI::App* certify =
      app.add_subcommand("certify", "independent oracle certification");
  add_io(certify, true);
  certify->add_option("--samples", samples, "cross-check sample count");

  CLI::App* render = app.add_subcommand("render", "SVG figure");
  add_io(render, true);

  CLI::App* demo3d =
      app.add_subcommand("demo3d", "three-dimensional counterexample");
  add_io(demo3d, false);
  demo3d->add_option("--count", count, "number of arc samples");

  CLI::App* gen = app.add_subcommand("gen", "seeded random body corpus");
  add_io(gen, false);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--count", count, "number of bodies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) return run_analyze(input, norm, output);
    if (*decompose) return run_decompose(input, output);
    if (*certify) return run_certify(input, output, samples);
    if (*render) return run_render(input, output);
    if (*demo3d) return run_demo3d(output, count);
    if (*gen) return run_gen(output, seed, count);
  } catch (const asymlat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const asymlat::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
