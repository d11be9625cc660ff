#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "geom.hpp"
#include "rng.hpp"
#include "sampling.hpp"

using namespace rpcd;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("triangle invariants") {
  Triangle t({0, 0}, {2, 0}, {0, 2});
  CHECK(t.area() == doctest::Approx(2.0));
  CHECK(t.center_of_mass().x == doctest::Approx(2.0 / 3));
  CHECK(t.center_of_mass().y == doctest::Approx(2.0 / 3));
  CHECK(t.edge_midpoint(0).x == doctest::Approx(1.0));  // midpoint of (2,0)-(0,2)
  CHECK(t.edge_midpoint(0).y == doctest::Approx(1.0));
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
}

TEST_CASE("standardize maps the standard triangle to itself") {
  Triangle t = standard_triangle();
  AffineMap m = standardize(t);
  for (int j = 0; j < 3; ++j) {
    Point p = m(t.vertex(j));
    CHECK(p.x == doctest::Approx(t.vertex(j).x).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(t.vertex(j).y).epsilon(1e-12));
  }
  Triangle t2({0, 0}, {1, 0}, {0.5, kSqrt3 / 2});
  AffineMap m2 = standardize(t2);
  CHECK(m2.a == doctest::Approx(1.0));
  CHECK(m2.d == doctest::Approx(1.0));
  CHECK(std::abs(m2.b) < 1e-12);
  CHECK(std::abs(m2.tx) < 1e-12);
}

TEST_CASE("standardize solves the affine system for T((0,0),(2,0),(0,2))") {
  Triangle t({0, 0}, {2, 0}, {0, 2});
  AffineMap m = standardize(t);
  Triangle e = standard_triangle();
  Point p1 = m({2, 0});
  CHECK(p1.x == doctest::Approx(1.0));
  CHECK(p1.y == doctest::Approx(0.0));
  Point p2 = m({0, 2});
  CHECK(p2.x == doctest::Approx(0.5));
  CHECK(p2.y == doctest::Approx(kSqrt3 / 2));
  // midpoints map to midpoints
  for (int j = 0; j < 3; ++j) {
    Point mm = m(t.edge_midpoint(j));
    CHECK(mm.x == doctest::Approx(e.edge_midpoint(j).x));
    CHECK(mm.y == doctest::Approx(e.edge_midpoint(j).y));
  }
  // map composed with inverse is the identity
  AffineMap inv = m.inverse();
  Point q = inv(m({0.3, 0.4}));
  CHECK(q.x == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(q.y == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("vertex regions") {
  Triangle t = standard_triangle();
  CHECK(t.vertex_region(t.vertex(0)) == 0);
  CHECK(t.vertex_region(t.vertex(1)) == 1);
  CHECK(t.vertex_region(t.vertex(2)) == 2);
  // center of mass ties all three ways; deterministic tie-break to index 0
  CHECK(t.vertex_region(t.center_of_mass()) == 0);
  CHECK(t.vertex_region({0.8, 0.05}) == 1);
  CHECK_THROWS_AS(t.vertex_region({2.0, 2.0}), std::domain_error);
}

TEST_CASE("vertex regions against the explicit quadrilateral") {
  // R(y2) is the polygon (M3, y2, M1, M_C)
  Triangle t = standard_triangle();
  ConvexPolygon r2({t.edge_midpoint(2), t.vertex(1), t.edge_midpoint(0), t.center_of_mass()});
  Rng rng(7);
  auto pts = sample_uniform_triangle(t, 4000, rng);
  for (const auto& p : pts) {
    bool in_r2 = r2.contains(p, 1e-9);
    CHECK(in_r2 == (t.vertex_region(p) == 1));
  }
}

TEST_CASE("vertex regions partition: areas sum to the triangle") {
  Triangle t = standard_triangle();
  Rng rng(11);
  auto pts = sample_uniform_triangle(t, 200000, rng);
  int counts[3] = {0, 0, 0};
  for (const auto& p : pts) counts[t.vertex_region(p)]++;
  for (int j = 0; j < 3; ++j) {
    double frac = counts[j] / 200000.0;
    CHECK(frac == doctest::Approx(1.0 / 3).epsilon(0.02));
  }
}

TEST_CASE("proximity region basics") {
  Triangle t = standard_triangle();
  SUBCASE("vertex source is degenerate") {
    ConvexPolygon n = proximity_region(t, Expansion::of(2.0), t.vertex(0));
    CHECK(n.area() == doctest::Approx(0.0));
    CHECK(n.contains(t.vertex(0)));
    CHECK_FALSE(n.contains({0.2, 0.1}));
  }
  SUBCASE("r = inf gives the whole triangle") {
    ConvexPolygon n = proximity_region(t, Expansion::inf(), {0.3, 0.2});
    CHECK(n.area() == doctest::Approx(t.area()));
  }
  SUBCASE("region contains its own point") {
    Rng rng(3);
    for (double r : {1.0, 1.2, 1.7, 2.5}) {
      auto pts = sample_uniform_triangle(t, 200, rng);
      for (const auto& p : pts) {
        CHECK(proximity_region(t, Expansion::of(r), p).contains(p, 1e-9));
        CHECK(in_proximity_region(t, Expansion::of(r), p, p));
      }
    }
  }
  SUBCASE("outside point is an error") {
    CHECK_THROWS_AS(proximity_region(t, Expansion::of(1.5), {0.9, 0.8}), std::domain_error);
  }
}

TEST_CASE("unclipped area matches (sqrt3/12) r^2 (y + sqrt3 x)^2") {
  Triangle t = standard_triangle();
  Point x{0.25, 0.10};
  double r = 2.0;
  ConvexPolygon n = proximity_region(t, Expansion::of(r), x);
  double expect = kSqrt3 / 12 * r * r * std::pow(x.y + kSqrt3 * x.x, 2);
  CHECK(n.area() == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("polygon containment agrees with half-plane oracle") {
  Triangle t = standard_triangle();
  ConvexPolygon n = proximity_region(t, Expansion::of(2.0), {0.25, 0.10});
  // brute-force half-plane test against every polygon edge
  auto oracle = [&](Point p) {
    const auto& v = n.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      if ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y) < -1e-12) return false;
    }
    return true;
  };
  CHECK(n.contains({0.9, 0.02}) == oracle({0.9, 0.02}));
  Rng rng(5);
  auto pts = sample_uniform_triangle(t, 2000, rng);
  for (const auto& p : pts) CHECK(n.contains(p) == oracle(p));
}

TEST_CASE("kernel predicate matches the polygon for random pairs") {
  Triangle t = standard_triangle();
  Rng rng(13);
  for (double r : {1.0, 1.3, 1.5, 2.0, 3.0}) {
    Expansion e = Expansion::of(r);
    auto xs = sample_uniform_triangle(t, 300, rng);
    auto zs = sample_uniform_triangle(t, 300, rng);
    int disagreements = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ConvexPolygon n = proximity_region(t, e, xs[i]);
      bool a = n.contains(zs[i], 1e-9);
      bool b = in_proximity_region(t, e, xs[i], zs[i]);
      disagreements += (a != b);
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("proximity regions grow with r") {
  Triangle t = standard_triangle();
  Rng rng(17);
  auto xs = sample_uniform_triangle(t, 150, rng);
  auto zs = sample_uniform_triangle(t, 150, rng);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool small = in_proximity_region(t, Expansion::of(1.2), xs[i], zs[i]);
    bool big = in_proximity_region(t, Expansion::of(2.1), xs[i], zs[i]);
    if (small) CHECK(big);
    double a1 = proximity_region(t, Expansion::of(1.2), xs[i]).area();
    double a2 = proximity_region(t, Expansion::of(2.1), xs[i]).area();
    CHECK(a2 >= a1 - 1e-12);
  }
}

TEST_CASE("gamma1 membership") {
  Triangle t = standard_triangle();
  SUBCASE("z = x is always a member for r >= 1") {
    Rng rng(23);
    auto pts = sample_uniform_triangle(t, 200, rng);
    for (const auto& p : pts) CHECK(gamma1_contains(t, Expansion::of(1.0), p, p));
  }
  SUBCASE("r = inf contains everything") {
    CHECK(gamma1_contains(t, Expansion::inf(), {0.2, 0.1}, {0.7, 0.1}));
  }
  SUBCASE("agrees with direct polygon membership") {
    Rng rng(29);
    auto xs = sample_uniform_triangle(t, 400, rng);
    auto zs = sample_uniform_triangle(t, 400, rng);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool g = gamma1_contains(t, Expansion::of(1.0), xs[i], zs[i]);
      bool direct = proximity_region(t, Expansion::of(1.0), zs[i]).contains(xs[i], 1e-9);
      CHECK(g == direct);
    }
  }
}

TEST_CASE("affine invariance of the arc relation") {
  // the arc indicator is preserved by the standardizing map
  Rng rng(31);
  Triangle tris[] = {Triangle({0, 0}, {3, 0}, {1, 2}), Triangle({-1, 2}, {4, 1}, {0.5, 6}),
                     Triangle({10, 10}, {11, 10.2}, {10.3, 11.5})};
  for (const auto& t : tris) {
    AffineMap m = standardize(t);
    Triangle e = standard_triangle();
    int mismatches = 0;
    auto xs = sample_uniform_triangle(t, 4000, rng);
    auto zs = sample_uniform_triangle(t, 4000, rng);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool raw = in_proximity_region(t, Expansion::of(1.5), xs[i], zs[i]);
      bool mapped = in_proximity_region(e, Expansion::of(1.5), m(xs[i]), m(zs[i]));
      mismatches += (raw != mapped);
    }
    CHECK(mismatches == 0);
  }
}
