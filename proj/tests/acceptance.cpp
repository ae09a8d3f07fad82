// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any gating criterion fails.
// Criterion 8 is exploratory (non-certified float mode) and does not gate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "capb/body_io.hpp"
#include "capb/cap_body.hpp"
#include "capb/cover_measure.hpp"
#include "capb/errors.hpp"
#include "capb/illuminate.hpp"
#include "capb/ilp.hpp"
#include "capb/rational.hpp"
#include "capb/sphere.hpp"
#include "testutil.hpp"

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  bool gating;
  std::function<std::string()> run;  // returns detail; throws on failure
};

struct Failure {
  std::string why;
};

[[noreturn]] void fail(const std::string& why) { throw Failure{why}; }

testutil::TempDir g_tmp;

// ---- criterion 1: headline certificate through the CLI -------------------

std::string criterion_headline() {
  std::string cert = g_tmp.path("acc_cert.json");
  auto t0 = Clock::now();
  auto r = testutil::run_cli("bound --t 250 --D 3000 --mode exact --output " +
                             cert);
  double dt = seconds_since(t0);
  if (r.exit_code != 0) fail("exit code " + std::to_string(r.exit_code));
  if (dt > 600.0) fail("took " + std::to_string(dt) + " s");
  ordered_json j = ordered_json::parse(testutil::read_text(cert));
  if (!(j["M_t"]["num"] == 2999 && j["M_t"]["den"] == 1000)) {
    fail("M_t = " + j["M_t"].dump());
  }
  if (j["verdict_lt_3"] != true) fail("verdict not < 3");
  if (j["floor_M_t"] != 2) fail("floor " + j["floor_M_t"].dump());
  std::ostringstream os;
  os << "M_250 = 2999/1000 exactly, floor 2, verdict < 3, in " << dt << " s";
  return os.str();
}

// ---- criterion 2: rounding-direction soundness audit ---------------------

std::string criterion_audit() {
  capb::IlpModel m = capb::build_model(250, 3000);
  capb::audit_rounding(m);  // throws VerificationFailed on any violation
  return "all 250 objective and 250 weight bounds certified, zero violations";
}

// ---- criterion 3: solver equivalence against brute force -----------------

std::string criterion_oracle() {
  int optimal = 0, unbounded = 0;
  for (int t = 1; t <= 6; ++t) {
    for (long D : {10L, 20L, 60L}) {
      capb::IlpModel m = capb::build_model(t, D);
      capb::IlpSolution sol = capb::solve_exact(m);
      testutil::BruteResult ref = testutil::brute_force_ilp(m);
      std::string tag = " at t=" + std::to_string(t) +
                        ", D=" + std::to_string(D);
      if (ref.unbounded != (sol.status == capb::SolveStatus::Unbounded)) {
        fail("boundedness disagreement" + tag);
      }
      if (ref.unbounded) {
        ++unbounded;
        continue;
      }
      if (sol.objective != ref.objective) {
        fail("objective mismatch" + tag + ": " +
             capb::to_string(sol.objective) + " vs " +
             capb::to_string(ref.objective));
      }
      if (sol.counts != ref.counts) fail("witness mismatch" + tag);
      ++optimal;
    }
  }
  return std::to_string(optimal) + " optima and " +
         std::to_string(unbounded) +
         " unbounded relaxations match exhaustive enumeration";
}

// ---- criterion 4: measure formula against Monte Carlo --------------------

std::string criterion_measure() {
  const auto bp = capb::union_measure_breakpoints();
  double worst_z = 0.0;
  for (int k = 1; k <= 100; ++k) {
    double theta = k * capb::kHalfPi / 100;
    double truth = capb::union_measure(theta);
    capb::McEstimate mc = capb::union_measure_mc(
        theta, 1000000, 1000 + static_cast<std::uint64_t>(k), 4);
    double diff = std::abs(mc.estimate - truth);
    if (diff > 5.0 * mc.stderr_ + 1e-15) {
      fail("grid point " + std::to_string(theta) + ": |" +
           std::to_string(mc.estimate) + " - " + std::to_string(truth) +
           "| > 5 sigma");
    }
    if (mc.stderr_ > 0) worst_z = std::max(worst_z, diff / mc.stderr_);
  }
  for (double b : {bp.theta_tangent, bp.theta_cover}) {
    double jump =
        std::abs(capb::union_measure(b + 1e-12) - capb::union_measure(b - 1e-12));
    if (jump >= 1e-9) {
      fail("discontinuity " + std::to_string(jump) + " at breakpoint " +
           std::to_string(b));
    }
  }
  if (std::abs(capb::lune_area(bp.theta_tangent)) > 1e-12) {
    fail("lune nonzero at tangency");
  }
  if (std::abs(capb::lune_area(bp.theta_cover) - 1.0 / 18.0) > 1e-12) {
    fail("lune != 1/18 at cover");
  }
  std::ostringstream os;
  os << "100/100 grid points within 5 sigma at 1e6 samples (worst "
     << worst_z << " sigma); breakpoints continuous; lune endpoints exact";
  return os.str();
}

// ---- criterion 5: k0 through the CLI -------------------------------------

std::string criterion_k0() {
  std::string body = g_tmp.path("acc_k0.json");
  capb::save_body(capb::k0(), body);

  const char* axes[6] = {"[1,0,0]", "[-1,0,0]", "[0,1,0]",
                         "[0,-1,0]", "[0,0,1]", "[0,0,-1]"};
  std::string full = g_tmp.path("acc_oct.json");
  testutil::write_text(
      full,
      R"({"directions": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]})");
  auto rfull = testutil::run_cli("verify --input " + body + " --directions " +
                                 full);
  if (rfull.exit_code != 0) fail("full octahedron rejected");

  for (int skip = 0; skip < 6; ++skip) {
    std::string five = g_tmp.path("acc_five.json");
    std::string text = "{\"directions\": [";
    for (int j = 0, n = 0; j < 6; ++j) {
      if (j == skip) continue;
      if (n++) text += ",";
      text += axes[j];
    }
    text += "]}";
    testutil::write_text(five, text);
    auto r = testutil::run_cli("verify --input " + body + " --directions " +
                               five);
    if (r.exit_code != 1) {
      fail("5-subset " + std::to_string(skip) + " exited " +
           std::to_string(r.exit_code));
    }
    ordered_json rep = ordered_json::parse(r.out);
    if (rep["unlit"].size() != 1) {
      fail("5-subset " + std::to_string(skip) + " left " +
           std::to_string(rep["unlit"].size()) + " caps unlit");
    }
  }

  std::string dirs = g_tmp.path("acc_k0_dirs.json");
  auto ril = testutil::run_cli("illuminate --input " + body +
                               " --seed 1 --budget 100000 --output " + dirs);
  if (ril.exit_code != 0) fail("illuminate failed");
  ordered_json d = ordered_json::parse(testutil::read_text(dirs));
  if (d["directions"].size() != 6) {
    fail("expected 6 directions, got " +
         std::to_string(d["directions"].size()));
  }
  ordered_json rep = ordered_json::parse(ril.out);
  if (rep["illuminated"] != true) fail("six directions did not verify");
  return "octahedron accepted; all six 5-subsets rejected with exactly one "
         "unlit cap; illuminate returned 6 verified directions";
}

// ---- criterion 6: 100 random bodies end to end ---------------------------

std::string criterion_random_bodies() {
  int max_dirs = 0;
  std::size_t max_caps = 0;
  for (int i = 0; i < 100; ++i) {
    capb::Rng rng(9000 + static_cast<std::uint64_t>(i));
    int target = 1 + (i * 60) / 100;
    double rmax = 0.35 + 0.3 * (i % 5);
    rmax = std::min(rmax, capb::kHalfPi - 0.01);
    double rmin = std::min(0.05 + 0.05 * (i % 7), rmax);
    capb::CapBody bd = capb::generate_random_body(rng, target, rmin, rmax);
    capb::DirectionSet ds =
        capb::illuminate(bd, 100000, 31 + static_cast<std::uint64_t>(i), 4);
    if (ds.directions.size() > 6) {
      fail("body " + std::to_string(i) + " needed " +
           std::to_string(ds.directions.size()) + " directions");
    }
    capb::IlluminationReport rep = capb::verify_illumination(bd, ds);
    if (!rep.illuminated) {
      fail("body " + std::to_string(i) + " failed verification");
    }
    max_dirs = std::max(max_dirs, static_cast<int>(ds.directions.size()));
    max_caps = std::max(max_caps, bd.size());
  }
  std::ostringstream os;
  os << "100/100 bodies (up to " << max_caps
     << " caps) illuminated and verified, at most " << max_dirs
     << " directions, zero failures";
  return os.str();
}

// ---- criterion 7: no five caps wider than pi/4 ---------------------------

std::string criterion_packing() {
  std::size_t max_seen = 0;
  for (int a = 0; a < 10000; ++a) {
    capb::Rng rng(50000 + static_cast<std::uint64_t>(a));
    capb::CapBody bd = capb::generate_random_body(
        rng, 5, capb::kPi / 4 + 0.01, capb::kHalfPi - 0.01);
    if (bd.size() > 4) {
      fail("attempt " + std::to_string(a) + " packed " +
           std::to_string(bd.size()) + " caps wider than pi/4");
    }
    if (!capb::fifth_largest_radius_bound(bd)) {
      fail("fifth-largest bound violated");
    }
    max_seen = std::max(max_seen, bd.size());
  }
  return "10000/10000 attempts topped out at " + std::to_string(max_seen) +
         " caps; fifth-largest bound held every time";
}

// ---- criterion 8 (soft): float-mode exploration --------------------------

std::string criterion_float() {
  auto t0 = Clock::now();
  capb::IlpSolution s250 = capb::solve_float(250);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "t=250: " << s250.objective_double << " in " << dt << " s";
  if (std::abs(s250.objective_double - 2.999) >= 0.01) {
    fail(os.str() + " — not within 0.01 of 2.999");
  }
  if (dt >= 1.0) fail(os.str() + " — solve stage not under 1 s");

  capb::IlpSolution s2000 = capb::solve_float(2000);
  os << "; t=2000: " << s2000.objective_double;
  if (!(s2000.objective_double < 2.97)) {
    fail(os.str() + " — not below 2.97 at this discretization (the value "
                    "decreases in t but crosses 2.97 only well past t=2000)");
  }
  return os.str();
}

// ---- criterion 9: byte-level determinism ---------------------------------

std::string criterion_determinism() {
  std::string c1 = g_tmp.path("det_cert1.json");
  std::string c2 = g_tmp.path("det_cert2.json");
  testutil::run_cli("bound --t 250 --D 3000 --output " + c1);
  testutil::run_cli("bound --t 250 --D 3000 --output " + c2);
  if (testutil::read_text(c1).empty() ||
      testutil::read_text(c1) != testutil::read_text(c2)) {
    fail("certificates differ between runs");
  }

  std::string body = g_tmp.path("det_k0.json");
  capb::save_body(capb::k0(), body);
  std::string d1 = g_tmp.path("det_dirs1.json");
  std::string d2 = g_tmp.path("det_dirs2.json");
  testutil::run_cli("illuminate --input " + body + " --seed 1 --output " + d1);
  testutil::run_cli("illuminate --input " + body + " --seed 1 --output " + d2);
  if (testutil::read_text(d1).empty() ||
      testutil::read_text(d1) != testutil::read_text(d2)) {
    fail("direction files differ between runs");
  }

  std::string g1 = g_tmp.path("det_gen1.json");
  std::string g2 = g_tmp.path("det_gen2.json");
  testutil::run_cli("generate --seed 6 --count 40 --radius-min 0.2 "
                    "--radius-max 1.2 --output " + g1);
  testutil::run_cli("generate --seed 6 --count 40 --radius-min 0.2 "
                    "--radius-max 1.2 --output " + g2);
  std::string gen = testutil::read_text(g1);
  if (gen.empty() || gen != testutil::read_text(g2)) {
    fail("generated bodies differ between runs");
  }

  std::string gd1 = g_tmp.path("det_gdirs1.json");
  std::string gd2 = g_tmp.path("det_gdirs2.json");
  testutil::run_cli("illuminate --input " + g1 + " --seed 8 --threads 1 "
                    "--output " + gd1);
  testutil::run_cli("illuminate --input " + g1 + " --seed 8 --threads 4 "
                    "--output " + gd2);
  if (testutil::read_text(gd1).empty() ||
      testutil::read_text(gd1) != testutil::read_text(gd2)) {
    fail("direction files depend on the thread count");
  }
  return "certificates, direction files and generated bodies byte-identical "
         "across repeated and multi-threaded runs";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, true, criterion_headline},   {2, true, criterion_audit},
      {3, true, criterion_oracle},     {4, true, criterion_measure},
      {5, true, criterion_k0},         {6, true, criterion_random_bodies},
      {7, true, criterion_packing},    {8, false, criterion_float},
      {9, true, criterion_determinism},
  };

  bool all_gating_pass = true;
  for (const Criterion& c : criteria) {
    std::string verdict, detail;
    try {
      detail = c.run();
      verdict = "PASS";
    } catch (const Failure& f) {
      verdict = c.gating ? "FAIL" : "SOFT FAIL";
      detail = f.why;
      if (c.gating) all_gating_pass = false;
    } catch (const std::exception& e) {
      verdict = c.gating ? "FAIL" : "SOFT FAIL";
      detail = std::string("unexpected error: ") + e.what();
      if (c.gating) all_gating_pass = false;
    }
    std::printf("criterion %d: %s%s — %s\n", c.id, verdict.c_str(),
                c.gating ? "" : " (non-gating)", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", all_gating_pass ? "PASS" : "FAIL");
  return all_gating_pass ? 0 : 1;
}
