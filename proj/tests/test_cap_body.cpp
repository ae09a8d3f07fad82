#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "capb/cap_body.hpp"
#include "capb/errors.hpp"

using namespace capb;

TEST_CASE("from_caps validates and sorts") {
  CHECK_THROWS_AS(CapBody::from_caps({}), DomainError);
  CHECK_THROWS_AS(
      CapBody::from_caps({Cap(UnitVector(1, 0, 0), kHalfPi - 1e-15),
                          Cap(UnitVector(-1, 0, 0), 2.0)}),
      RadiusOutOfRange);

  // Overlap: two caps of radius 0.5 with centers 0.9 apart.
  CHECK_THROWS_AS(
      CapBody::from_caps(
          {Cap(UnitVector(0, 0, 1), 0.5),
           Cap(UnitVector(std::sin(0.9), 0, std::cos(0.9)), 0.5)}),
      OverlappingCaps);

  // Tangency is allowed: centers exactly radius-sum apart.
  CHECK_NOTHROW(CapBody::from_caps(
      {Cap(UnitVector(0, 0, 1), 0.5),
       Cap(UnitVector(std::sin(1.0), 0, std::cos(1.0)), 0.5)}));

  CapBody b = CapBody::from_caps({Cap(UnitVector(0, 0, 1), 0.3),
                                  Cap(UnitVector(0, 0, -1), 0.7),
                                  Cap(UnitVector(1, 0, 0), 0.5)});
  CHECK(b.size() == 3);
  CHECK(b.caps()[0].radius == 0.7);
  CHECK(b.caps()[1].radius == 0.5);
  CHECK(b.caps()[2].radius == 0.3);
}

TEST_CASE("radius ties sort by lexicographic center") {
  CapBody b = CapBody::from_caps({Cap(UnitVector(0, 0, 1), 0.4),
                                  Cap(UnitVector(0, 0, -1), 0.4),
                                  Cap(UnitVector(1, 0, 0), 0.4)});
  CHECK(b.caps()[0].center.z() == doctest::Approx(-1.0));
  CHECK(b.caps()[1].center.z() == doctest::Approx(1.0));
  CHECK(b.caps()[2].center.x() == doctest::Approx(1.0));
}

TEST_CASE("vertex/cap duality") {
  Cap c(UnitVector(0.2, -0.3, 0.9), 1.1);
  Vertex v = vertex_of(c);
  CHECK(norm(v.position) == doctest::Approx(1.0 / std::cos(1.1)));
  Cap back = cap_of(v);
  CHECK(back.radius == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(geodesic_distance(back.center, c.center) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Vertices on or inside the unit ball have no cap.
  CHECK_THROWS_AS(cap_of(Vertex{{1, 0, 0}}), VertexInsideBall);
  CHECK_THROWS_AS(cap_of(Vertex{{0.5, 0.5, 0.5}}), VertexInsideBall);
  CHECK_THROWS_AS(cap_of(Vertex{{1.0 + 5e-13, 0, 0}}), VertexInsideBall);
  CHECK_NOTHROW(cap_of(Vertex{{1.001, 0, 0}}));
}

TEST_CASE("k0: six tangent quarter-pi caps at the axes") {
  CapBody k = k0();
  REQUIRE(k.size() == 6);
  for (const Cap& c : k.caps()) {
    CHECK(c.radius == doctest::Approx(kPi / 4).epsilon(1e-15));
  }
  // Vertex set: scaled octahedron at distance sqrt(2).
  for (const Cap& c : k.caps()) {
    CHECK(norm(vertex_of(c).position) == doctest::Approx(std::sqrt(2.0)));
  }
  CHECK(fifth_largest_radius_bound(k));
}

TEST_CASE("from_vertices reproduces k0 from the octahedron") {
  const double s = std::sqrt(2.0);
  CapBody b = CapBody::from_vertices({Vertex{{s, 0, 0}},
                                      Vertex{{-s, 0, 0}},
                                      Vertex{{0, s, 0}},
                                      Vertex{{0, -s, 0}},
                                      Vertex{{0, 0, s}},
                                      Vertex{{0, 0, -s}}});
  CapBody k = k0();
  REQUIRE(b.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(b.caps()[i].radius ==
          doctest::Approx(k.caps()[i].radius).epsilon(1e-12));
    CHECK(geodesic_distance(b.caps()[i].center, k.caps()[i].center) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("fifth largest radius bound on small bodies") {
  CapBody one = CapBody::from_caps({Cap(UnitVector(0, 0, 1), 1.5)});
  CHECK(fifth_largest_radius_bound(one));
}

TEST_CASE("random bodies: deterministic, valid, within the radius range") {
  Rng a(99), b(99);
  CapBody ba = generate_random_body(a, 30, 0.1, 0.6);
  CapBody bb = generate_random_body(b, 30, 0.1, 0.6);
  REQUIRE(ba.size() == bb.size());
  CHECK(ba.size() >= 1);
  CHECK(ba.size() <= 30);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    CHECK(ba.caps()[i].radius == bb.caps()[i].radius);
    CHECK(ba.caps()[i].center.x() == bb.caps()[i].center.x());
    CHECK(ba.caps()[i].radius >= 0.1);
    CHECK(ba.caps()[i].radius <= 0.6);
  }
  CHECK(fifth_largest_radius_bound(ba));
}

TEST_CASE("packing caps wider than pi/4 saturates at four") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    CapBody b = generate_random_body(rng, 5, kPi / 4 + 0.01, kHalfPi - 0.01);
    CHECK(b.size() <= 4);
    CHECK(fifth_largest_radius_bound(b));
  }
}

TEST_CASE("generator degenerate range radius_min == radius_max") {
  Rng rng(3);
  CapBody b = generate_random_body(rng, 10, 0.4, 0.4);
  for (const Cap& c : b.caps()) CHECK(c.radius == 0.4);
}
