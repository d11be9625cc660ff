#pragma once

#include <vector>

#include "delaunay.hpp"
#include "digraph.hpp"
#include "sampling.hpp"

namespace rpcd {

/// Relative density on a Delaunay mesh: per-triangle digraphs (no arcs cross
/// triangles), aggregated as rho_J = sum |A_j| / (n (n-1)), the adjusted
/// density over sum n_j (n_j - 1), and the weighted U-statistic
/// U = sum w_j^2 rho_{n_j}.
struct MultiDensity {
  double rho = 0.0;       // rho_n(r, J)
  double adjusted = 0.0;  // rho^adj; 0 when no triangle holds two points
  double u_stat = 0.0;
  std::uint64_t arc_count = 0;
  std::uint64_t max_arcs = 0;  // sum n_j (n_j - 1)
  std::size_t n = 0;
  std::vector<std::size_t> counts;          // n_j
  std::vector<double> per_triangle_rho;     // rho_{n_j}; 0 when n_j < 2
};

/// Corollary-style moments: mu(r,J) = mu(r) sum w^2,
/// nu(r,J) = nu(r) sum w^3 + 4 mu(r)^2 (sum w^3 - (sum w^2)^2).
struct MultiMoments {
  double mu = 0.0;
  double nu = 0.0;
};
MultiMoments moments_multi(double r, std::span<const double> weights);

/// Asymptotic variance of the adjusted density:
/// (1/n)[ nu(r) q + 4 mu(r)^2 (q - 1) ], q = sum w^3 / (sum w^2)^2.
double adjusted_variance(double r, std::span<const double> weights, long n);

/// Assigns each point to its triangle (shared edges -> lowest index; throws
/// with the point's index if outside the hull) and builds per-cell digraphs.
MultiDensity density_multi(const DelaunayMesh& mesh, Expansion e,
                           const std::vector<Point>& points);

/// Per-point triangle assignment only.
std::vector<int> assign_triangles(const DelaunayMesh& mesh, const std::vector<Point>& points);

/// Uniform (or alternative) sample over the hull: triangle picked with
/// probability w_j, then the standard-triangle construction mapped into it.
std::vector<Point> sample_hull(const DelaunayMesh& mesh, const Alternative& alt,
                               std::size_t n, Rng& rng);

}  // namespace rpcd
