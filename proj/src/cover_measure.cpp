#include "capb/cover_measure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace capb {

namespace {

constexpr double kBoundaryTol = 1e-12;

}  // namespace

UnionMeasureBreakpoints union_measure_breakpoints() {
  return {0.5 * std::acos(-1.0 / 3.0), std::acos(1.0 / 3.0)};
}

double lune_area(double theta) {
  auto bp = union_measure_breakpoints();
  if (theta < bp.theta_tangent - kBoundaryTol ||
      theta > bp.theta_cover + kBoundaryTol) {
    throw DomainError("lune_area defined on [" +
                      std::to_string(bp.theta_tangent) + ", " +
                      std::to_string(bp.theta_cover) + "], got " +
                      std::to_string(theta));
  }
  // Stable rewrite of (π - arccos((-1/3 - c²)/s²) - 2·arccos(√2·cotθ)·c)/2π.
  // Both arccos arguments approach ±1 at the tangency endpoint, where a plain
  // acos loses ~1e-9 to cancellation.  With g = 1 - 3c² (which is >= 0 on the
  // window and hits 0 exactly at tangency), half-angle identities give
  //   π - arccos((-1/3 - c²)/s²) = 2·atan2(√(2g), 2)
  //   arccos(√2·cotθ)            = atan2(√g, √2·c)
  // so the O(√g) leading parts of the two terms cancel explicitly and the
  // value vanishes cleanly at the endpoint.
  double c = std::cos(theta);
  double g = std::max(0.0, 1.0 - 3.0 * c * c);
  double rg = std::sqrt(g);
  return (std::atan2(std::sqrt(2.0) * rg, 2.0) -
          c * std::atan2(rg, std::sqrt(2.0) * c)) /
         kPi;
}

int union_measure_case(double theta) {
  if (!(theta > 0.0 && theta <= kHalfPi + kBoundaryTol)) {
    throw DomainError("union_measure defined on (0, pi/2], got " +
                      std::to_string(theta));
  }
  auto bp = union_measure_breakpoints();
  if (theta < bp.theta_tangent) return 1;
  if (theta < bp.theta_cover) return 2;
  return 3;
}

double union_measure(double theta) {
  switch (union_measure_case(theta)) {
    case 1:
      return 2.0 * (1.0 - std::cos(theta));
    case 2:
      return 2.0 * (1.0 - std::cos(theta)) - 6.0 * lune_area(theta);
    default:
      return 1.0;
  }
}

McEstimate union_measure_mc(double theta, long long samples,
                            std::uint64_t seed, int threads) {
  union_measure_case(theta);  // domain check
  if (samples < 1) {
    throw DomainError("sample count must be >= 1");
  }
  const double edge = std::cos(theta);
  const auto tetra = tetrahedron();

  // Fixed-size chunks, each with its own derived rng stream; total hit count
  // is a sum of per-chunk integers, so the result does not depend on how
  // chunks are distributed over threads.
  constexpr long long kChunk = 65536;
  const long long n_chunks = (samples + kChunk - 1) / kChunk;
  std::vector<long long> hits(static_cast<std::size_t>(n_chunks), 0);

  auto run_chunk = [&](long long ci) {
    Rng rng(chunk_seed(seed, static_cast<std::uint64_t>(ci)));
    long long lo = ci * kChunk;
    long long hi = std::min(samples, lo + kChunk);
    long long h = 0;
    for (long long k = lo; k < hi; ++k) {
      UnitVector p = rng.unit_vector();
      for (const UnitVector& v : tetra) {
        if (dot(p, v) >= edge) {
          ++h;
          break;
        }
      }
    }
    hits[static_cast<std::size_t>(ci)] = h;
  };

  if (threads <= 1 || n_chunks == 1) {
    for (long long ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long long> next{0};
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          long long ci = next.fetch_add(1);
          if (ci >= n_chunks) return;
          run_chunk(ci);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  long long total = 0;
  for (long long h : hits) total += h;
  double p = static_cast<double>(total) / static_cast<double>(samples);
  double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return {p, se, samples};
}

double unlit_probability(double phi) {
  if (!(phi >= 0.0 && phi < kHalfPi)) {
    throw DomainError("unlit_probability defined on [0, pi/2), got " +
                      std::to_string(phi));
  }
  double theta = kHalfPi - phi;
  if (theta >= union_measure_breakpoints().theta_cover) {
    return 0.0;  // full-coverage case: such caps are always illuminated
  }
  double p = 1.0 - union_measure(theta);
  if (p < 0.0) {
    p = p >= -kBoundaryTol ? 0.0 : p;  // clamp rounding noise only
  }
  return std::min(p, 1.0);
}

}  // namespace capb
