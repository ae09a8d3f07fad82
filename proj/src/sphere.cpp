#include "capb/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace capb {

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) {
  return std::sqrt(dot(v, v));
}

UnitVector::UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

UnitVector::UnitVector(const Vec3& v) {
  double n = norm(v);
  if (!(n > 1e-14)) {
    throw DomainError("cannot normalize a (near-)zero vector");
  }
  v_ = v * (1.0 / n);
}

double dot(const UnitVector& a, const UnitVector& b) {
  return dot(a.vec(), b.vec());
}

double geodesic_distance(const UnitVector& x, const UnitVector& y) {
  return std::acos(std::clamp(dot(x, y), -1.0, 1.0));
}

Cap::Cap(const UnitVector& center, double radius, bool closed)
    : center(center), radius(radius), closed(closed) {
  if (!(radius > 0.0 && radius <= kPi)) {
    throw RadiusOutOfRange("cap radius must lie in (0, pi]");
  }
}

bool cap_contains(const Cap& c, const UnitVector& p) {
  double d = std::clamp(dot(c.center, p), -1.0, 1.0);
  double edge = std::cos(c.radius);
  return c.closed ? d >= edge : d > edge;
}

double cap_measure(double radius) {
  return (1.0 - std::cos(radius)) / 2.0;
}

Rotation::Rotation() : w_(1.0), x_(0.0), y_(0.0), z_(0.0) {}

Rotation::Rotation(double w, double x, double y, double z) {
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 1e-14)) {
    throw DomainError("cannot normalize a (near-)zero quaternion");
  }
  w_ = w / n;
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

Vec3 Rotation::apply(const Vec3& v) const {
  // v' = v + 2 q x (q x v + w v), with q = (x_, y_, z_).
  Vec3 q{x_, y_, z_};
  Vec3 s = cross(q, v) + v * w_;
  return v + cross(q, s) * 2.0;
}

UnitVector Rotation::apply(const UnitVector& v) const {
  return UnitVector(apply(v.vec()));
}

Rotation Rotation::inverse() const {
  return Rotation(w_, -x_, -y_, -z_);
}

UnitVector rotate(const Rotation& r, const UnitVector& p) {
  return r.apply(p);
}

double Rng::uniform() {
  // 53 random bits into [0, 1); bit-stable across platforms, unlike
  // std::uniform_real_distribution.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::gaussian() {
  // Marsaglia polar method; hand-rolled for cross-platform determinism.
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  have_spare_ = true;
  return u * m;
}

UnitVector Rng::unit_vector() {
  for (;;) {
    Vec3 g{gaussian(), gaussian(), gaussian()};
    if (norm(g) > 1e-8) return UnitVector(g);
  }
}

Rotation Rng::rotation() {
  for (;;) {
    double w = gaussian(), x = gaussian(), y = gaussian(), z = gaussian();
    if (std::sqrt(w * w + x * x + y * y + z * z) > 1e-8) {
      return Rotation(w, x, y, z);
    }
  }
}

UnitVector random_unit_vector(Rng& rng) {
  return rng.unit_vector();
}

Rotation random_rotation(Rng& rng) {
  return rng.rotation();
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
  // splitmix64 finalizer over seed + golden-ratio stride.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (chunk_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::array<UnitVector, 4> tetrahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  return {UnitVector(s, s, s), UnitVector(s, -s, -s), UnitVector(-s, s, -s),
          UnitVector(-s, -s, s)};
}

}  // namespace capb
