#pragma once

#include <cstdint>
#include <vector>

#include "capb/cap_body.hpp"
#include "capb/sphere.hpp"

namespace capb {

struct DirectionSet {
  std::vector<UnitVector> directions;
};

struct CapAssignment {
  int cap_index = 0;
  int direction_index = -1;  // -1: no direction illuminates this cap
};

struct IlluminationReport {
  std::vector<CapAssignment> per_cap;
  std::vector<int> unlit;
  bool hull_ok = false;
  bool illuminated = false;  // = unlit empty AND hull_ok
};

// Direction v illuminates the cap iff v lies in the open target cap
// C(-center, pi/2 - radius), i.e. <center, v> < -sin(radius) strictly;
// boundary hits do not count.
bool cap_illuminated_by(const Cap& c, const UnitVector& v);

// True iff the positive hull of the directions is all of E^3, i.e. the
// origin is an interior point of their convex hull.  Decided exactly: the
// directions must span E^3 linearly (rational Gaussian elimination) and the
// LP  max ε  s.t.  sum λ_i v_i = 0, sum λ_i = 1, λ_i >= ε  must reach
// ε* > 1e-9 (exact simplex over rationals; coordinates are taken at their
// exact double values).
bool positive_hull_spans(const DirectionSet& dirs);

// Indices of caps no direction illuminates (empty = every cap is lit).
std::vector<int> unlit_caps(const CapBody& body, const DirectionSet& dirs);

struct RotationSearchResult {
  Rotation rotation;
  std::vector<int> unlit;
};

// Samples up to `budget` Haar rotations of the tetrahedron and returns the
// one whose four directions leave the fewest caps unlit, ties broken by
// first found.  Deterministic per seed and independent of `threads`.
// Throws SearchExhausted if every sampled rotation leaves more than 2 caps
// unlit (possible in principle, since only the expected count is bounded,
// but astronomically unlikely at the default budget; raise it to retry).
RotationSearchResult search_rotation(const CapBody& body, long budget,
                                     std::uint64_t seed, int threads = 1);

// The constructive step: the four directions of the best rotated
// tetrahedron plus, for each cap left unlit (at most 2), its antipodal
// center -x̂_i, which always illuminates it.  The result verifies and has
// between 4 and 6 directions.
DirectionSet illuminate(const CapBody& body, long budget, std::uint64_t seed,
                        int threads = 1);

// Full check of both illumination conditions with a per-cap assignment
// (first illuminating direction, or none).
IlluminationReport verify_illumination(const CapBody& body,
                                       const DirectionSet& dirs);

}  // namespace capb
