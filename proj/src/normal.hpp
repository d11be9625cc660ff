#pragma once

namespace rpcd {

/// Standard normal CDF. erfc-based, |abs error| well below 1e-12.
double norm_cdf(double z);

/// Quantile Phi^{-1}(p), p in (0,1). Acklam's rational approximation polished
/// with one Halley step against norm_cdf; ~1e-15 absolute.
double norm_quantile(double p);

}  // namespace rpcd
