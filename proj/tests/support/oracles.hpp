#pragma once

// Test-only Monte Carlo oracles. These estimate the moment curves straight
// from the geometry (pair membership and Gamma_1 membership) so the
// closed-form tables are checked against an independent route.

#include <cstdint>
#include <vector>

#include "sampling.hpp"

namespace rpcd::oracle {

struct McEstimate {
  double value = 0.0;
  double se = 0.0;
};

/// P(X2 in N^r(X1)) under the null or an alternative, by pair MC.
McEstimate mc_mu(double r, const Alternative& alt, std::size_t pairs, std::uint64_t seed);

/// Cov[h12, h13] by triple MC (batch standard error).
McEstimate mc_nu(double r, const Alternative& alt, std::size_t triples, std::uint64_t seed);

/// Var[h12] under the null by pair MC.
McEstimate mc_var_h(double r, std::size_t pairs, std::uint64_t seed);

/// Var[rho_n(r)] by replicate MC under the null.
McEstimate mc_var_rho(double r, std::size_t n, std::size_t replicates, std::uint64_t seed);

/// Two-sample Kolmogorov-Smirnov p-value (asymptotic).
double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b);

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;  // excess
};
SampleStats sample_stats(const std::vector<double>& v);

}  // namespace rpcd::oracle
