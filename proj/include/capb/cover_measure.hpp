#pragma once

#include <cstdint>

#include "capb/sphere.hpp"

namespace capb {

// Case boundaries of the piecewise formula for the union measure:
// caps become tangent at theta_tangent = arccos(-1/3)/2 and the union covers
// the whole sphere from theta_cover = arccos(1/3) on.
struct UnionMeasureBreakpoints {
  double theta_tangent;
  double theta_cover;
};

UnionMeasureBreakpoints union_measure_breakpoints();

// Measure of the intersection of two of the four caps (a "lune"):
//   A(theta) = (1/2pi)·(-arccos((-1/3 - cos²θ)/sin²θ)
//              - 2·arccos(√2·cot θ)·cos θ + π).
// Defined for theta in [theta_tangent, theta_cover]; zero at the left
// endpoint, 1/18 at the right.
double lune_area(double theta);

// σ(C_θ): measure of the union of four caps of radius theta centered at the
// vertices of the inscribed regular tetrahedron, for theta in (0, pi/2]:
//   case 1 (theta <  theta_tangent):  2(1 - cos θ)          (disjoint caps)
//   case 2 (theta <  theta_cover):    2(1 - cos θ) - 6·A(θ) (pairwise lunes)
//   case 3 (theta >= theta_cover):    1                     (full cover)
double union_measure(double theta);

// Which of the three cases applies to theta (1, 2 or 3).
int union_measure_case(double theta);

struct McEstimate {
  double estimate;
  double stderr_;
  long long samples;
};

// Monte Carlo oracle for union_measure: fraction of uniform sphere points
// within geodesic distance theta of some tetrahedron vertex, with binomial
// standard error.  Deterministic per seed and independent of thread count
// (fixed-size chunks with per-chunk derived seeds).
McEstimate union_measure_mc(double theta, long long samples,
                            std::uint64_t seed, int threads = 1);

// Probability that a vertex with base-cap radius phi is not illuminated by a
// random rotation of the tetrahedron: 1 - σ(C_{pi/2 - phi}), clamped to
// [0, 1].  Exactly 0 once pi/2 - phi >= theta_cover.
double unlit_probability(double phi);

}  // namespace capb
