#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "capb/body_io.hpp"
#include "capb/cap_body.hpp"
#include "capb/cover_measure.hpp"
#include "capb/errors.hpp"
#include "capb/illuminate.hpp"
#include "capb/ilp.hpp"
#include "capb/rational.hpp"
#include "capb/sphere.hpp"

namespace {

using nlohmann::ordered_json;

int cmd_bound(int t, long d, const std::string& mode,
              const std::string& output) {
  if (t < 1 || d < 1) throw capb::DomainError("need t >= 1 and D >= 1");

  capb::CertificateReport report;
  if (mode == "float") {
    capb::IlpSolution sol = capb::solve_float(t);
    report.t = t;
    report.D = d;
    report.mode = capb::ProofMode::Float;
    report.m_t = sol.objective;
    report.floor_m_t = capb::floor_rational(sol.objective);
    report.verdict_lt_3 = sol.objective < 3;
    report.counts = sol.counts;
    capb::write_json_file(capb::certificate_to_json(report), output);
    std::cerr << "M_" << t << " ~= " << sol.objective_double
              << " (float mode, NOT certified)\n";
    return 0;
  }

  capb::IlpModel model = capb::build_model(t, d);
  capb::IlpSolution sol = capb::solve_exact(model);
  if (sol.status == capb::SolveStatus::Unbounded) {
    std::cerr << "relaxation unbounded at t=" << t << ", D=" << d
              << " (a zero-weight index has positive objective); "
                 "increase D\n";
    return 1;
  }
  report = capb::certify(sol, model);
  capb::write_json_file(capb::certificate_to_json(report), output);
  std::cerr << "M_" << t << " = " << capb::to_string(report.m_t) << " ~= "
            << sol.objective_double << " (certified exact), floor "
            << report.floor_m_t.get_str() << ", verdict M_t < 3: "
            << (report.verdict_lt_3 ? "yes" : "no") << "\n";
  return report.verdict_lt_3 ? 0 : 1;
}

ordered_json measure_row(double theta) {
  ordered_json row;
  row["theta"] = theta;
  row["case"] = capb::union_measure_case(theta);
  row["sigma"] = capb::union_measure(theta);
  return row;
}

int cmd_measure(double theta, int grid, long long samples, std::uint64_t seed,
                int threads) {
  if (grid > 0) {
    ordered_json table = ordered_json::array();
    for (int k = 1; k <= grid; ++k) {
      table.push_back(measure_row(k * capb::kHalfPi / grid));
    }
    std::cout << table.dump(2) << "\n";
    return 0;
  }
  ordered_json row = measure_row(theta);
  if (row["case"] == 2) {
    row["lune"] = capb::lune_area(theta);
  } else {
    row["lune"] = nullptr;
  }
  capb::McEstimate mc = capb::union_measure_mc(theta, samples, seed, threads);
  row["mc"] = ordered_json{{"estimate", mc.estimate},
                           {"stderr", mc.stderr_},
                           {"samples", mc.samples}};
  std::cout << row.dump(2) << "\n";
  std::cerr << "sigma(C_theta) = " << row["sigma"].get<double>() << " (case "
            << row["case"].get<int>() << "), MC " << mc.estimate << " +- "
            << mc.stderr_ << "\n";
  return 0;
}

int cmd_illuminate(const std::string& input, std::uint64_t seed, long budget,
                   int threads, const std::string& output) {
  capb::CapBody body = capb::load_body(input);
  capb::DirectionSet dirs = capb::illuminate(body, budget, seed, threads);
  capb::save_directions(dirs, output);
  capb::IlluminationReport report = capb::verify_illumination(body, dirs);
  std::cout << capb::report_to_json(report).dump(2) << "\n";
  std::cerr << dirs.directions.size() << " directions -> " << output << ", "
            << (report.illuminated ? "verified" : "NOT verified") << "\n";
  return report.illuminated ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& directions) {
  capb::CapBody body = capb::load_body(input);
  capb::DirectionSet dirs = capb::load_directions(directions);
  capb::IlluminationReport report = capb::verify_illumination(body, dirs);
  std::cout << capb::report_to_json(report).dump(2) << "\n";
  std::cerr << (report.illuminated
                    ? "illuminated"
                    : "not verified by this criterion (" +
                          std::to_string(report.unlit.size()) +
                          " unlit, hull " + (report.hull_ok ? "ok" : "bad") +
                          ")")
            << "\n";
  return report.illuminated ? 0 : 1;
}

int cmd_generate(std::uint64_t seed, int count, double radius_min,
                 double radius_max, const std::string& output) {
  if (count < 1) throw capb::DomainError("need count >= 1");
  if (!(radius_min > 0.0 && radius_min <= radius_max &&
        radius_max < capb::kHalfPi - 1e-12)) {
    throw capb::DomainError(
        "need 0 < radius-min <= radius-max < pi/2 - 1e-12");
  }
  capb::Rng rng(seed);
  capb::CapBody body =
      capb::generate_random_body(rng, count, radius_min, radius_max);
  capb::save_body(body, output);
  std::cerr << body.size() << " caps -> " << output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cap-body illumination toolkit"};
  app.require_subcommand(1);

  int t = 250;
  long d = 3000;
  std::string mode = "exact";
  std::uint64_t seed = 0;
  long budget = 100000;
  int threads = 1;
  long long samples = 1000000;
  double theta = 1.0;
  int grid = 0;
  int count = 20;
  double radius_min = 0.1;
  double radius_max = 1.2;
  std::string input, directions, output;

  CLI::App* bound = app.add_subcommand(
      "bound", "certified upper bound M_t on the expected unlit-cap count");
  bound->add_option("--t", t, "discretization steps");
  bound->add_option("--D", d, "rounding denominator");
  bound->add_option("--mode", mode, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  bound->add_option("--output", output, "certificate file")
      ->default_str("certificate.json");

  CLI::App* measure = app.add_subcommand(
      "measure", "union measure sigma(C_theta) of four tetrahedron caps");
  measure->add_option("--theta", theta, "cap radius in (0, pi/2]");
  measure->add_option("--grid", grid, "print an N-point table instead");
  measure->add_option("--samples", samples, "Monte Carlo sample count");
  measure->add_option("--seed", seed, "Monte Carlo seed");
  measure->add_option("--threads", threads, "worker threads");

  CLI::App* illuminate = app.add_subcommand(
      "illuminate", "find and verify <= 6 illuminating directions");
  illuminate->add_option("--input", input, "cap-body file")->required();
  illuminate->add_option("--seed", seed, "rotation search seed");
  illuminate->add_option("--budget", budget, "rotation samples");
  illuminate->add_option("--threads", threads, "worker threads");
  illuminate->add_option("--output", output, "direction file")
      ->default_str("directions.json");

  CLI::App* verify =
      app.add_subcommand("verify", "check a direction set against a body");
  verify->add_option("--input", input, "cap-body file")->required();
  verify->add_option("--directions", directions, "direction file")->required();

  CLI::App* generate =
      app.add_subcommand("generate", "random valid cap body");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--count", count, "target cap count");
  generate->add_option("--radius-min", radius_min, "smallest radius");
  generate->add_option("--radius-max", radius_max, "largest radius");
  generate->add_option("--output", output, "body file")
      ->default_str("body.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) {
      if (output.empty()) output = "certificate.json";
      return cmd_bound(t, d, mode, output);
    }
    if (measure->parsed()) {
      return cmd_measure(theta, grid, samples, seed, threads);
    }
    if (illuminate->parsed()) {
      if (output.empty()) output = "directions.json";
      return cmd_illuminate(input, seed, budget, threads, output);
    }
    if (verify->parsed()) {
      return cmd_verify(input, directions);
    }
    if (generate->parsed()) {
      if (output.empty()) output = "body.json";
      return cmd_generate(seed, count, radius_min, radius_max, output);
    }
  } catch (const capb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
