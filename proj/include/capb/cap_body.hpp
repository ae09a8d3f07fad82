#pragma once

#include <vector>

#include "capb/sphere.hpp"

namespace capb {

// Disjointness tolerance: two base caps may touch, so the geodesic distance
// between centers must be at least r_a + r_b - kTangencyTol.
inline constexpr double kTangencyTol = 1e-12;

// Apex of the cone over a base cap; always lies strictly outside the unit
// ball.
struct Vertex {
  Vec3 position;
};

// A cap body conv(B^3 ∪ {x_1, ..., x_m}), encoded by its base caps.
// Invariants: every radius lies in (0, pi/2); the open base caps are pairwise
// disjoint (tangency allowed); caps are sorted by decreasing radius, ties
// broken by lexicographic center order.
class CapBody {
 public:
  static CapBody from_caps(std::vector<Cap> caps);
  static CapBody from_vertices(const std::vector<Vertex>& vertices);

  const std::vector<Cap>& caps() const { return caps_; }
  std::size_t size() const { return caps_.size(); }

 private:
  CapBody() = default;
  std::vector<Cap> caps_;
};

// The vertex a base cap is the shadow of: x = center/cos(radius).
Vertex vertex_of(const Cap& c);

// The base cap of a vertex: center x/|x|, radius arccos(1/|x|).
// Throws VertexInsideBall when |x| <= 1 + 1e-12.
Cap cap_of(const Vertex& v);

// The extremal body K_0: six caps of radius pi/4 centered at ±e_i (vertex set
// = scaled regular octahedron at distance sqrt(2)); non-antipodal cap pairs
// are exactly tangent.
CapBody k0();

// Consistency check: at most four caps may have radius exceeding pi/4, i.e.
// with m >= 5 caps the fifth largest radius is <= pi/4 (+1e-12).  Holds for
// every valid body; exposed so tests and callers can assert it.
bool fifth_largest_radius_bound(const CapBody& body);

// Greedy rejection packing: samples caps with uniform centers and radii
// uniform in [radius_min, radius_max], keeping each cap iff it is disjoint
// from all kept caps.  Stops at target_count accepted caps or after
// max_rejections consecutive rejections; the result is always valid but may
// hold fewer than target_count caps.
CapBody generate_random_body(Rng& rng, int target_count, double radius_min,
                             double radius_max, int max_rejections = 2000);

}  // namespace capb
