#pragma once

// Shared helpers for the test binaries: a brute-force integer-programming
// oracle, a CLI runner, and temp-file plumbing.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "capb/ilp.hpp"
#include "capb/rational.hpp"

namespace testutil {

struct BruteResult {
  bool unbounded = false;
  capb::Rational objective;
  std::vector<long> counts;
};

// Exhaustive search over all feasible nonnegative integer vectors, in
// lexicographically ascending order with strict improvement — so the winner
// is the lexicographically smallest optimum, matching the solver's contract.
// Only meant for tiny models.
inline BruteResult brute_force_ilp(const capb::IlpModel& m) {
  using capb::Rational;
  const int t = m.t;
  std::vector<char> big(static_cast<std::size_t>(t), 0);
  for (int i : m.bigcap_indices) big[static_cast<std::size_t>(i)] = 1;

  BruteResult res;
  for (int i = 0; i < t; ++i) {
    if (m.weight[static_cast<std::size_t>(i)] == 0 &&
        m.obj[static_cast<std::size_t>(i)] > 0 && !big[i]) {
      res.unbounded = true;
      return res;
    }
  }

  std::vector<long> cur(static_cast<std::size_t>(t), 0);
  bool have = false;
  std::function<void(int, Rational, Rational, int)> rec =
      [&](int idx, Rational used, Rational value, int big_used) {
        if (idx == t) {
          if (!have || value > res.objective) {
            have = true;
            res.objective = value;
            res.counts = cur;
          }
          return;
        }
        const Rational& w = m.weight[static_cast<std::size_t>(idx)];
        const Rational& c = m.obj[static_cast<std::size_t>(idx)];
        for (long k = 0;; ++k) {
          Rational next_used = used + Rational(k) * w;
          int next_big = big_used + (big[idx] ? static_cast<int>(k) : 0);
          if (next_used > m.capacity || next_big > m.bigcap_capacity) break;
          cur[static_cast<std::size_t>(idx)] = k;
          rec(idx + 1, next_used, value + Rational(k) * c, next_big);
          cur[static_cast<std::size_t>(idx)] = 0;
          // A free item that adds no value: extra copies only make the
          // vector lexicographically larger.
          if (w == 0 && c == 0 && !big[idx]) break;
        }
      };
  rec(0, Rational(0), Rational(0), 0);
  res.counts.resize(static_cast<std::size_t>(t));
  return res;
}

struct CliResult {
  int exit_code = -1;
  std::string out;  // stdout only
};

inline std::string cli_path() {
  if (const char* p = std::getenv("CAPB_CLI")) return p;
  return "./build/tools/capb";
}

// Runs the CLI with `args` appended, capturing stdout; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

// Per-process scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("capb_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  std::filesystem::path dir_;
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testutil
