#pragma once

#include <span>

#include "sampling.hpp"

namespace rpcd::efficacy {

/// Pitman efficacy (mu''(r, eps=0))^2 / nu(r). Throws for r where nu = 0.
double pae_seg(double r);
double pae_assoc(double r);

struct Efficacy {
  double value = 0.0;
  bool infinite = false;  // degenerate alternative variance (Propositions 1-2)
};

/// Hodges-Lehmann efficacy (mu_alt(r,eps) - mu(r))^2 / nu_alt(r,eps); eps must
/// be one of the six tabulated values.
Efficacy hlae(double r, const Alternative& alt);

/// Asymptotic power at level alpha against segregation / association.
double power_seg(double r, long n, double eps, double alpha);
double power_assoc(double r, long n, double eps, double alpha);

// ----- Delaunay-conditional (J > 1) variants; weights must be positive and
// ----- sum to 1.

double pae_seg_multi(double r, std::span<const double> weights);
double pae_assoc_multi(double r, std::span<const double> weights);
Efficacy hlae_multi(double r, const Alternative& alt, std::span<const double> weights);

}  // namespace rpcd::efficacy
