#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rng.hpp"
#include "sampling.hpp"

using namespace rpcd;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("empty draw") {
  Triangle t = standard_triangle();
  Rng rng(1);
  CHECK(sample_uniform_triangle(t, 0, rng).empty());
}

TEST_CASE("uniform sample mean is the center of mass") {
  Triangle t = standard_triangle();
  Rng rng(2024);
  const std::size_t n = 1000000;
  auto pts = sample_uniform_triangle(t, n, rng);
  double sx = 0, sy = 0;
  for (const auto& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  sx /= n;
  sy /= n;
  // sd of x over the triangle is ~0.204; 3 sigma of the mean
  CHECK(std::abs(sx - 0.5) < 3 * 0.21 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(sy - kSqrt3 / 6) < 3 * 0.21 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("one third of uniform samples in each vertex region") {
  Triangle t = standard_triangle();
  Rng rng(99);
  const std::size_t n = 300000;
  auto pts = sample_uniform_triangle(t, n, rng);
  std::size_t c0 = 0;
  for (const auto& p : pts) c0 += t.vertex_region(p) == 0;
  double frac = static_cast<double>(c0) / static_cast<double>(n);
  double band = 3 * std::sqrt((1.0 / 3) * (2.0 / 3) / static_cast<double>(n));
  CHECK(std::abs(frac - 1.0 / 3) < band);
}

TEST_CASE("determinism: same seed, same stream, same points") {
  Triangle t = standard_triangle();
  Rng a(123, 7), b(123, 7);
  auto pa = sample_uniform_triangle(t, 50, a);
  auto pb = sample_uniform_triangle(t, 50, b);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(pa[i].x == pb[i].x);
    CHECK(pa[i].y == pb[i].y);
  }
  Rng c(123, 8);
  auto pc = sample_uniform_triangle(t, 50, c);
  CHECK(pa[0].x != pc[0].x);  // different stream
}

TEST_CASE("alternative parameter validation") {
  CHECK_THROWS_AS(Alternative::segregation(0.0), std::domain_error);
  CHECK_THROWS_AS(Alternative::segregation(kSqrt3 / 3.0), std::domain_error);
  CHECK_THROWS_AS(Alternative::association(-0.1), std::domain_error);
  CHECK_NOTHROW(Alternative::segregation(kSqrt3 / 8));
}

TEST_CASE("delta to epsilon") {
  CHECK(delta_to_epsilon(1.0 / 16) == doctest::Approx(kSqrt3 / 8).epsilon(1e-14));
  CHECK(delta_to_epsilon(0.25) == doctest::Approx(kSqrt3 / 4).epsilon(1e-14));
  CHECK(delta_to_epsilon(1e-12) == doctest::Approx(0.0).epsilon(1e-5));
  CHECK_THROWS_AS(delta_to_epsilon(0.0), std::domain_error);
  CHECK_THROWS_AS(delta_to_epsilon(0.5), std::domain_error);
}

TEST_CASE("support compliance is exact") {
  Triangle t = standard_triangle();
  Rng rng(5);
  for (const Alternative& alt :
       {Alternative::segregation(kSqrt3 / 8), Alternative::segregation(2 * kSqrt3 / 7),
        Alternative::association(5 * kSqrt3 / 24), Alternative::association(kSqrt3 / 21)}) {
    auto pts = sample_alternative(t, alt, 20000, rng);
    for (const auto& p : pts) CHECK(in_alternative_support(t, alt, p));
  }
}

TEST_CASE("segregation support avoids the corner triangles of an arbitrary triangle") {
  Triangle t({0, 0}, {4, 0}, {1, 3});
  Alternative alt = Alternative::segregation(kSqrt3 / 4);
  Rng rng(17);
  auto pts = sample_alternative(t, alt, 5000, rng);
  // the standardized image must keep min vertex height above eps
  AffineMap m = standardize(t);
  Triangle e = standard_triangle();
  for (const auto& p : pts) {
    Bary w = e.barycentric(m(p));
    double h = kSqrt3 / 2 *
               std::min({1.0 - w[0], 1.0 - w[1], 1.0 - w[2]});
    CHECK(h > alt.eps - 1e-9);
  }
}

TEST_CASE("association samples live in the three corner triangles") {
  Triangle t = standard_triangle();
  Alternative alt = Alternative::association(kSqrt3 / 12);
  Rng rng(31);
  auto pts = sample_alternative(t, alt, 5000, rng);
  double height = kSqrt3 / 3.0 - alt.eps;
  for (const auto& p : pts) {
    Bary w = t.barycentric(p);
    double h = kSqrt3 / 2 * std::min({1.0 - w[0], 1.0 - w[1], 1.0 - w[2]});
    CHECK(h <= height + 1e-9);
  }
}

TEST_CASE("segregation at tiny eps is indistinguishable from the null") {
  Triangle t = standard_triangle();
  Rng rng(77);
  auto null_pts = sample_uniform_triangle(t, 20000, rng);
  auto seg_pts = sample_alternative(t, Alternative::segregation(1e-7), 20000, rng);
  std::vector<double> a, b;
  for (const auto& p : null_pts) a.push_back(p.x);
  for (const auto& p : seg_pts) b.push_back(p.x);
  CHECK(oracle::ks_two_sample_pvalue(a, b) > 0.001);
}

TEST_CASE("acceptance rate matches the analytic support area") {
  // segregation support fraction is 1 - 4 eps^2 for eps <= sqrt3/4
  Triangle t = standard_triangle();
  double eps = kSqrt3 / 8;
  double expect = 1.0 - 4 * eps * eps;
  Rng rng(55);
  std::size_t hits = 0;
  const std::size_t n = 400000;
  auto pts = sample_uniform_triangle(t, n, rng);
  Alternative alt = Alternative::segregation(eps);
  for (const auto& p : pts) hits += in_alternative_support(t, alt, p);
  double frac = static_cast<double>(hits) / static_cast<double>(n);
  CHECK(std::abs(frac - expect) < 3 * std::sqrt(expect * (1 - expect) / static_cast<double>(n)));
}

TEST_CASE("mean density ordering across eps (consistency direction)") {
  // E[rho] increases with eps under segregation, decreases under association
  Triangle t = standard_triangle();
  Expansion e = Expansion::of(1.5);
  auto mean_rho = [&](const Alternative& alt, std::uint64_t seed) {
    double acc = 0.0;
    const std::size_t reps = 600, n = 10;
    for (std::size_t i = 0; i < reps; ++i) {
      Rng rng(seed, i);
      auto pts = sample_alternative(t, alt, n, rng);
      acc += static_cast<double>(count_arcs(t, e, pts)) / 90.0;
    }
    return acc / static_cast<double>(reps);
  };
  double m0 = mean_rho(Alternative::null(), 1);
  double m1 = mean_rho(Alternative::segregation(0.10), 2);
  double m2 = mean_rho(Alternative::segregation(0.25), 3);
  double m3 = mean_rho(Alternative::segregation(0.40), 4);
  CHECK(m0 < m1);
  CHECK(m1 < m2);
  CHECK(m2 < m3);
  double a1 = mean_rho(Alternative::association(0.10), 5);
  double a2 = mean_rho(Alternative::association(0.25), 6);
  double a3 = mean_rho(Alternative::association(0.40), 7);
  CHECK(a1 < m0);
  CHECK(a2 < a1);
  CHECK(a3 < a2);
}
