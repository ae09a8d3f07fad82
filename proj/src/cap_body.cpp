#include "capb/cap_body.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace capb {

namespace {

bool center_less(const Cap& a, const Cap& b) {
  auto key = [](const Cap& c) {
    return std::make_tuple(c.center.x(), c.center.y(), c.center.z());
  };
  return key(a) < key(b);
}

}  // namespace

CapBody CapBody::from_caps(std::vector<Cap> caps) {
  if (caps.empty()) {
    throw DomainError("a cap body needs at least one cap");
  }
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (!(caps[i].radius > 0.0 && caps[i].radius < kHalfPi)) {
      throw RadiusOutOfRange("base cap " + std::to_string(i) +
                             " radius must lie in (0, pi/2)");
    }
  }
  std::sort(caps.begin(), caps.end(), [](const Cap& a, const Cap& b) {
    if (a.radius != b.radius) return a.radius > b.radius;
    return center_less(a, b);
  });
  for (std::size_t a = 0; a < caps.size(); ++a) {
    for (std::size_t b = a + 1; b < caps.size(); ++b) {
      double gap = geodesic_distance(caps[a].center, caps[b].center);
      if (gap < caps[a].radius + caps[b].radius - kTangencyTol) {
        throw OverlappingCaps("caps " + std::to_string(a) + " and " +
                              std::to_string(b) + " overlap");
      }
    }
  }
  CapBody body;
  body.caps_ = std::move(caps);
  return body;
}

CapBody CapBody::from_vertices(const std::vector<Vertex>& vertices) {
  std::vector<Cap> caps;
  caps.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    caps.push_back(cap_of(v));
  }
  return from_caps(std::move(caps));
}

Vertex vertex_of(const Cap& c) {
  if (!(c.radius > 0.0 && c.radius < kHalfPi)) {
    throw RadiusOutOfRange("vertex exists only for acute cap radius");
  }
  return Vertex{c.center.vec() * (1.0 / std::cos(c.radius))};
}

Cap cap_of(const Vertex& v) {
  double n = norm(v.position);
  if (n <= 1.0 + 1e-12) {
    throw VertexInsideBall("vertex norm " + std::to_string(n) +
                           " is not outside the unit ball");
  }
  return Cap(UnitVector(v.position), std::acos(1.0 / n));
}

CapBody k0() {
  std::vector<Cap> caps;
  const double r = kPi / 4.0;
  for (double s : {1.0, -1.0}) {
    caps.emplace_back(UnitVector(s, 0, 0), r);
    caps.emplace_back(UnitVector(0, s, 0), r);
    caps.emplace_back(UnitVector(0, 0, s), r);
  }
  return CapBody::from_caps(std::move(caps));
}

bool fifth_largest_radius_bound(const CapBody& body) {
  if (body.size() < 5) return true;
  // Caps are sorted by decreasing radius, so index 4 holds the fifth largest.
  return body.caps()[4].radius <= kPi / 4.0 + 1e-12;
}

CapBody generate_random_body(Rng& rng, int target_count, double radius_min,
                             double radius_max, int max_rejections) {
  std::vector<Cap> kept;
  int rejections = 0;
  while (static_cast<int>(kept.size()) < target_count &&
         rejections < max_rejections) {
    UnitVector center = rng.unit_vector();
    double radius = radius_min == radius_max
                        ? radius_min
                        : rng.uniform(radius_min, radius_max);
    bool ok = true;
    for (const Cap& c : kept) {
      if (geodesic_distance(center, c.center) <
          radius + c.radius - kTangencyTol) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.emplace_back(center, radius);
      rejections = 0;
    } else {
      ++rejections;
    }
  }
  return CapBody::from_caps(std::move(kept));
}

}  // namespace capb
