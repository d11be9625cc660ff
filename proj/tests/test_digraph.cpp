#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "digraph.hpp"
#include "doctest.h"
#include "rng.hpp"
#include "sampling.hpp"

using namespace rpcd;

TEST_CASE("single vertex digraph is empty") {
  Triangle t = standard_triangle();
  Digraph d = build_digraph(t, Expansion::of(1.5), {{0.4, 0.2}});
  CHECK(d.order() == 1);
  CHECK(d.arc_count() == 0);
  CHECK_THROWS_AS(relative_density(d), std::invalid_argument);
}

TEST_CASE("r = inf is the complete digraph") {
  Triangle t = standard_triangle();
  Rng rng(1);
  auto pts = sample_uniform_triangle(t, 5, rng);
  Digraph d = build_digraph(t, Expansion::inf(), pts);
  CHECK(d.arc_count() == 20);
  CHECK(relative_density(d).rho == doctest::Approx(1.0));
  CHECK(d.pair_kernel(0, 1) == 2);
}

TEST_CASE("arc set matches the polygon membership matrix") {
  Triangle t = standard_triangle();
  Expansion e = Expansion::of(1.5);
  std::vector<Point> pts = {{0.2, 0.1}, {0.55, 0.3}, {0.75, 0.05}};
  Digraph d = build_digraph(t, e, pts);
  for (std::size_t i = 0; i < 3; ++i) {
    ConvexPolygon n = proximity_region(t, e, pts[i]);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(d.has_arc(i, j) == n.contains(pts[j], 1e-9));
    }
  }
}

TEST_CASE("random digraphs match the brute-force oracle") {
  Triangle t = standard_triangle();
  Rng rng(42);
  for (double r : {1.0, 1.4, 2.0, 3.5}) {
    Expansion e = Expansion::of(r);
    auto pts = sample_uniform_triangle(t, 40, rng);
    Digraph d = build_digraph(t, e, pts);
    std::uint64_t arcs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ConvexPolygon n = proximity_region(t, e, pts[i]);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        bool member = n.contains(pts[j], 1e-9);
        arcs += member;
        CHECK(d.has_arc(i, j) == member);
      }
    }
    CHECK(d.arc_count() == arcs);
    CHECK(count_arcs(t, e, pts) == arcs);
  }
}

TEST_CASE("density identities") {
  Triangle t = standard_triangle();
  Rng rng(7);
  auto pts = sample_uniform_triangle(t, 10, rng);
  Digraph d = build_digraph(t, Expansion::of(1.3), pts);
  DensityResult res = relative_density(d);
  // rho = sum_{i<j} h_ij / (n (n-1)) exactly
  std::uint64_t hsum = 0;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) hsum += static_cast<std::uint64_t>(d.pair_kernel(i, j));
  CHECK(hsum == d.arc_count());
  CHECK(res.rho == doctest::Approx(static_cast<double>(hsum) / 90.0));
  CHECK(res.rho >= 0.0);
  CHECK(res.rho <= 1.0);
  // kernel symmetry and self-pair error
  CHECK(d.pair_kernel(2, 5) == d.pair_kernel(5, 2));
  CHECK_THROWS_AS(d.pair_kernel(3, 3), std::invalid_argument);
}

TEST_CASE("90 arcs at n = 10 is density one") {
  Digraph d(10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      if (i != j) d.add_arc(i, j);
  CHECK(relative_density(d).rho == 1.0);
}

TEST_CASE("arc sets grow with r") {
  Triangle t = standard_triangle();
  Rng rng(3);
  auto pts = sample_uniform_triangle(t, 30, rng);
  Digraph d1 = build_digraph(t, Expansion::of(1.2), pts);
  Digraph d2 = build_digraph(t, Expansion::of(1.9), pts);
  CHECK(d2.arc_count() >= d1.arc_count());
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j)
      if (d1.has_arc(i, j)) CHECK(d2.has_arc(i, j));
}

TEST_CASE("permutation invariance of the density") {
  Triangle t = standard_triangle();
  Rng rng(9);
  auto pts = sample_uniform_triangle(t, 25, rng);
  double rho1 = relative_density(build_digraph(t, Expansion::of(1.6), pts)).rho;
  std::reverse(pts.begin(), pts.end());
  std::swap(pts[3], pts[11]);
  double rho2 = relative_density(build_digraph(t, Expansion::of(1.6), pts)).rho;
  CHECK(rho1 == doctest::Approx(rho2).epsilon(1e-15));
}

TEST_CASE("point outside the triangle is reported with its index") {
  Triangle t = standard_triangle();
  std::vector<Point> pts = {{0.2, 0.1}, {1.4, 0.9}};
  CHECK_THROWS_WITH_AS(build_digraph(t, Expansion::of(1.0), pts),
                       doctest::Contains("point 1"), std::domain_error);
}
