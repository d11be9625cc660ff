#include "efficacy.hpp"

#include <cmath>
#include <stdexcept>

#include "moments.hpp"
#include "normal.hpp"

namespace rpcd::efficacy {

namespace {

using moments::MomentValue;

void check_weights(std::span<const double> w) {
  if (w.empty()) throw std::invalid_argument("empty weight vector");
  double s = 0.0;
  for (double wi : w) {
    if (!(wi > 0.0)) throw std::invalid_argument("weights must be positive");
    s += wi;
  }
  if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
}

double sum_pow(std::span<const double> w, int p) {
  double s = 0.0;
  for (double wi : w) s += std::pow(wi, p);
  return s;
}

MomentValue nu_alt(double r, const Alternative& alt) {
  if (alt.kind == AltKind::kSegregation) return moments::nu_seg_at(r, alt.eps);
  if (alt.kind == AltKind::kAssociation) return moments::nu_assoc_at(r, alt.eps);
  throw std::invalid_argument("HLAE requires a non-null alternative");
}

double mu_alt(double r, const Alternative& alt) {
  return alt.kind == AltKind::kSegregation ? moments::mu_seg_at(r, alt.eps)
                                           : moments::mu_assoc_at(r, alt.eps);
}

}  // namespace

double pae_seg(double r) {
  double nu = moments::nu_null(r);
  if (!(nu > 0.0)) throw std::domain_error("degenerate null variance");
  double d = moments::mu_seg_dd(r);
  return d * d / nu;
}

double pae_assoc(double r) {
  double nu = moments::nu_null(r);
  if (!(nu > 0.0)) throw std::domain_error("degenerate null variance");
  double d = moments::mu_assoc_dd(r);
  return d * d / nu;
}

Efficacy hlae(double r, const Alternative& alt) {
  MomentValue nv = nu_alt(r, alt);
  if (nv.degenerate) return {0.0, true};
  double shift = mu_alt(r, alt) - moments::mu_null(r);
  return {shift * shift / nv.value, false};
}

double power_seg(double r, long n, double eps, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::domain_error("alpha outside (0,1)");
  double mu0 = moments::mu_null(r), nu0 = moments::nu_null(r);
  double mus = moments::mu_seg_at(r, eps);
  MomentValue nus = moments::nu_seg_at(r, eps);
  double z = norm_quantile(1.0 - alpha);
  if (nus.degenerate) {
    double cv = mu0 + z * std::sqrt(nu0 / static_cast<double>(n));
    return mus > cv ? 1.0 : 0.0;
  }
  double arg = z * std::sqrt(nu0 / nus.value) +
               std::sqrt(static_cast<double>(n)) * (mu0 - mus) / std::sqrt(nus.value);
  return 1.0 - norm_cdf(arg);
}

double power_assoc(double r, long n, double eps, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::domain_error("alpha outside (0,1)");
  double mu0 = moments::mu_null(r), nu0 = moments::nu_null(r);
  double mua = moments::mu_assoc_at(r, eps);
  MomentValue nua = moments::nu_assoc_at(r, eps);
  double z = norm_quantile(alpha);
  if (nua.degenerate) {
    double cv = mu0 + z * std::sqrt(nu0 / static_cast<double>(n));
    return mua < cv ? 1.0 : 0.0;
  }
  double arg = z * std::sqrt(nu0 / nua.value) +
               std::sqrt(static_cast<double>(n)) * (mu0 - mua) / std::sqrt(nua.value);
  return norm_cdf(arg);
}

double pae_seg_multi(double r, std::span<const double> w) {
  check_weights(w);
  double w2 = sum_pow(w, 2), w3 = sum_pow(w, 3);
  double mu = moments::mu_null(r), nu = moments::nu_null(r);
  double nuJ = nu * w3 + 4.0 * mu * mu * (w3 - w2 * w2);
  if (!(nuJ > 0.0)) throw std::domain_error("degenerate multi-triangle variance");
  double d = moments::mu_seg_dd(r) * w2;
  return d * d / nuJ;
}

double pae_assoc_multi(double r, std::span<const double> w) {
  check_weights(w);
  double w2 = sum_pow(w, 2), w3 = sum_pow(w, 3);
  double mu = moments::mu_null(r), nu = moments::nu_null(r);
  double nuJ = nu * w3 + 4.0 * mu * mu * (w3 - w2 * w2);
  if (!(nuJ > 0.0)) throw std::domain_error("degenerate multi-triangle variance");
  double d = moments::mu_assoc_dd(r) * w2;
  return d * d / nuJ;
}

Efficacy hlae_multi(double r, const Alternative& alt, std::span<const double> w) {
  check_weights(w);
  if (alt.kind == AltKind::kNull) return {0.0, false};
  double w2 = sum_pow(w, 2), w3 = sum_pow(w, 3);
  MomentValue nv = nu_alt(r, alt);
  double ma = mu_alt(r, alt);
  double nuJ = nv.value * w3 + 4.0 * ma * ma * (w3 - w2 * w2);
  if (nv.degenerate && !(nuJ > 0.0)) return {0.0, true};
  double shift = (ma - moments::mu_null(r)) * w2;
  if (!(nuJ > 0.0)) return {0.0, true};
  return {shift * shift / nuJ, false};
}

}  // namespace rpcd::efficacy
