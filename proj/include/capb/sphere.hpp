#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "capb/errors.hpp"

namespace capb {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

// A point of S^2.  Construction renormalizes, so code downstream may rely on
// unit length up to floating-point error.
class UnitVector {
 public:
  UnitVector(double x, double y, double z);  // throws DomainError on ~zero input
  explicit UnitVector(const Vec3& v);

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }
  UnitVector operator-() const { return UnitVector(-v_); }

 private:
  Vec3 v_;
};

double dot(const UnitVector& a, const UnitVector& b);

// Angle arccos<x,y> in [0, pi]; the inner product is clamped to [-1, 1] so
// numerically antipodal or coincident points never produce NaN.
double geodesic_distance(const UnitVector& x, const UnitVector& y);

// Spherical cap of the given angular radius about `center`; `closed` selects
// between C[c, r] (boundary included) and C(c, r) (boundary excluded).
// Radius must lie in (0, pi]; base caps of cap bodies additionally need an
// acute radius, which their constructors enforce.
struct Cap {
  Cap(const UnitVector& center, double radius, bool closed = true);

  UnitVector center;
  double radius;
  bool closed;
};

bool cap_contains(const Cap& c, const UnitVector& p);

// Normalized spherical measure of a cap of radius r in [0, pi]: (1 - cos r)/2.
double cap_measure(double radius);

// Rotation of E^3 stored as a unit quaternion.
class Rotation {
 public:
  Rotation();  // identity
  Rotation(double w, double x, double y, double z);  // renormalizes

  Vec3 apply(const Vec3& v) const;
  UnitVector apply(const UnitVector& v) const;
  Rotation inverse() const;

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

 private:
  double w_, x_, y_, z_;
};

UnitVector rotate(const Rotation& r, const UnitVector& p);

// Deterministic random source.  All randomness in the library flows through
// this class, and the primitive distributions are implemented by hand so that
// a fixed seed reproduces byte-identical results on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();                         // [0, 1)
  double uniform(double lo, double hi);     // [lo, hi)
  double gaussian();                        // standard normal (polar method)
  UnitVector unit_vector();                 // uniform on S^2
  Rotation rotation();                      // Haar-uniform on SO(3)

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

UnitVector random_unit_vector(Rng& rng);
Rotation random_rotation(Rng& rng);

// Derives an independent stream seed for a worker chunk; used by the parallel
// Monte Carlo and rotation-search loops so results do not depend on the
// thread count.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

// Vertices of the canonical regular tetrahedron inscribed in S^2:
// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), each scaled by 1/sqrt(3).
// All pairwise inner products are exactly -1/3.
std::array<UnitVector, 4> tetrahedron();

}  // namespace capb
