#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delaunay.hpp"
#include "multi.hpp"
#include "sampling.hpp"

namespace rpcd {

/// Asymptotic-normal test of complete spatial randomness against
/// segregation (large rho) and association (small rho).
struct TestReport {
  double rho = 0.0;
  double mu0 = 0.0;
  double nu0 = 0.0;  // asymptotic variance of sqrt(n) (rho - mu0)
  std::size_t n = 0;
  std::uint64_t arc_count = 0;
  double z = 0.0;       // sqrt(n) (rho - mu0) / sqrt(nu0)
  double p_seg = 1.0;   // P(Z > z)
  double p_assoc = 1.0; // P(Z < z)
  bool degenerate = false;
  bool reject_seg = false;
  bool reject_assoc = false;
  double alpha = 0.05;
  // multi-triangle extras (J > 1)
  std::size_t j_count = 1;
  double rho_adjusted = 0.0;
  double u_stat = 0.0;
};

TestReport asymptotic_test(const Triangle& tri, Expansion e, const std::vector<Point>& points,
                           double alpha);
TestReport asymptotic_test(const DelaunayMesh& mesh, Expansion e,
                           const std::vector<Point>& points, double alpha);

struct McConfig {
  std::size_t n = 10;
  std::size_t replicates = 10000;
  double r = 1.0;                      // ignored when infinite = true
  bool infinite_r = false;
  Alternative alt = Alternative::null();
  double alpha = 0.05;
  std::uint64_t seed = 1;
  bool use_asymptotic_cv = false;
  int threads = 0;  // 0 = hardware default
};

struct McResult {
  double critical_value = 0.0;   // order statistic of the null replicates
  double empirical_alpha = 0.0;
  double empirical_power = 0.0;  // vs the configured alternative (if non-null)
  std::vector<double> null_rho;  // sorted
  std::vector<double> alt_rho;   // sorted (empty under the null config)
};

/// Null replicates -> empirical critical value and significance level.
/// Segregation direction: C = rho_(ceil((1-alpha) N)), alpha_hat = mean(rho > C);
/// association: C = rho_(floor(alpha N)), alpha_hat = mean(rho < C).
McResult mc_critical_value(const McConfig& cfg);

/// Alternative replicates against a given critical value (or the asymptotic
/// one when cfg.use_asymptotic_cv). Fills empirical_power.
McResult mc_power(const McConfig& cfg, std::optional<double> critical_value = {});

/// Runs null + alternative replicates with the same protocol as the source
/// tables and returns the combined result.
McResult mc_study(const McConfig& cfg);

/// Replicated density draws (sorted by replicate id, not by value).
std::vector<double> mc_replicates(const McConfig& cfg, bool under_alternative);

/// MC power at each n in ns (consistency probe).
std::vector<double> consistency_probe(double r, const Alternative& alt,
                                      const std::vector<std::size_t>& ns, std::size_t replicates,
                                      double alpha, std::uint64_t seed);

/// Mesh-level variants conditioning on a Delaunay mesh (uniform over the hull).
McResult mc_critical_value(const DelaunayMesh& mesh, const McConfig& cfg);
McResult mc_power(const DelaunayMesh& mesh, const McConfig& cfg,
                  std::optional<double> critical_value = {});

}  // namespace rpcd
