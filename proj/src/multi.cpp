#include "multi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "moments.hpp"

namespace rpcd {

MultiMoments moments_multi(double r, std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("empty weight vector");
  double w2 = 0.0, w3 = 0.0, s = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    s += w;
    w2 += w * w;
    w3 += w * w * w;
  }
  if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
  double mu = moments::mu_null(r), nu = moments::nu_null(r);
  return {mu * w2, nu * w3 + 4.0 * mu * mu * (w3 - w2 * w2)};
}

double adjusted_variance(double r, std::span<const double> weights, long n) {
  if (n < 2) throw std::invalid_argument("adjusted variance requires n >= 2");
  double w2 = 0.0, w3 = 0.0, s = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    s += w;
    w2 += w * w;
    w3 += w * w * w;
  }
  if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
  double q = w3 / (w2 * w2);
  double mu = moments::mu_null(r), nu = moments::nu_null(r);
  return (nu * q + 4.0 * mu * mu * (q - 1.0)) / static_cast<double>(n);
}

std::vector<int> assign_triangles(const DelaunayMesh& mesh, const std::vector<Point>& points) {
  std::vector<int> cell(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int j = mesh.locate(points[i]);
    if (j < 0)
      throw std::domain_error("point " + std::to_string(i) + " outside the convex hull");
    cell[i] = j;
  }
  return cell;
}

MultiDensity density_multi(const DelaunayMesh& mesh, Expansion e,
                           const std::vector<Point>& points) {
  const std::size_t J = mesh.size();
  std::vector<int> cell = assign_triangles(mesh, points);
  std::vector<std::vector<Point>> groups(J);
  for (std::size_t i = 0; i < points.size(); ++i)
    groups[static_cast<std::size_t>(cell[i])].push_back(points[i]);

  MultiDensity out;
  out.n = points.size();
  out.counts.resize(J);
  out.per_triangle_rho.assign(J, 0.0);
  for (std::size_t j = 0; j < J; ++j) {
    out.counts[j] = groups[j].size();
    const std::size_t nj = groups[j].size();
    if (nj >= 1) out.max_arcs += static_cast<std::uint64_t>(nj) * (nj - 1);
    if (nj < 2) continue;
    Triangle tj = mesh.triangle(j);
    std::uint64_t arcs = count_arcs(tj, e, groups[j]);
    out.arc_count += arcs;
    out.per_triangle_rho[j] =
        static_cast<double>(arcs) / (static_cast<double>(nj) * static_cast<double>(nj - 1));
    out.u_stat += mesh.weights[j] * mesh.weights[j] * out.per_triangle_rho[j];
  }
  if (out.n >= 2)
    out.rho = static_cast<double>(out.arc_count) /
              (static_cast<double>(out.n) * static_cast<double>(out.n - 1));
  if (out.max_arcs > 0)
    out.adjusted = static_cast<double>(out.arc_count) / static_cast<double>(out.max_arcs);
  return out;
}

std::vector<Point> sample_hull(const DelaunayMesh& mesh, const Alternative& alt,
                               std::size_t n, Rng& rng) {
  if (mesh.size() == 0) throw std::invalid_argument("empty mesh");
  std::vector<double> cdf(mesh.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    acc += mesh.weights[j];
    cdf[j] = acc;
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u = rng.next_double() * acc;
    std::size_t j = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (j >= mesh.size()) j = mesh.size() - 1;
    Triangle tj = mesh.triangle(j);
    pts.push_back(sample_alternative(tj, alt, 1, rng)[0]);
  }
  return pts;
}

}  // namespace rpcd
