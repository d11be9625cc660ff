#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "digraph.hpp"
#include "rng.hpp"

namespace rpcd::oracle {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// barycentric sample in the standard triangle restricted to the support
struct B3 {
  double b0, b1, b2;
};

inline B3 draw(Rng& rng) {
  double u = rng.next_double(), v = rng.next_double();
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return {1.0 - u - v, u, v};
}

inline double min_height(const B3& b) {
  double m = std::min({1.0 - b.b0, 1.0 - b.b1, 1.0 - b.b2});
  return kSqrt3 / 2.0 * m;
}

inline bool supported(const B3& b, const Alternative& alt) {
  if (alt.kind == AltKind::kNull) return true;
  double h = min_height(b);
  return alt.kind == AltKind::kSegregation ? h > alt.eps : h <= kSqrt3 / 3.0 - alt.eps;
}

inline B3 draw_support(Rng& rng, const Alternative& alt) {
  for (;;) {
    B3 b = draw(rng);
    if (supported(b, alt)) return b;
  }
}

// arc x -> z from precomputed barycentrics (h-coordinate comparison)
inline bool arc(const B3& x, const B3& z, double r) {
  double m = x.b0;
  int j = 0;
  if (x.b1 > m) {
    m = x.b1;
    j = 1;
  }
  if (x.b2 > m) {
    m = x.b2;
    j = 2;
  }
  double hz = j == 0 ? 1.0 - z.b0 : (j == 1 ? 1.0 - z.b1 : 1.0 - z.b2);
  return hz <= r * (1.0 - m);
}

}  // namespace

McEstimate mc_mu(double r, const Alternative& alt, std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed, 0xabcd);
  const std::size_t nbatch = 20;
  const std::size_t per = pairs / nbatch;
  double bsum = 0.0, bsum2 = 0.0;
  for (std::size_t b = 0; b < nbatch; ++b) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < per; ++i) {
      B3 x = draw_support(rng, alt);
      B3 z = draw_support(rng, alt);
      hits += arc(x, z, r);
    }
    double m = static_cast<double>(hits) / static_cast<double>(per);
    bsum += m;
    bsum2 += m * m;
  }
  double mean = bsum / nbatch;
  double var = std::max(0.0, bsum2 / nbatch - mean * mean);
  return {mean, std::sqrt(var / (nbatch - 1))};
}

McEstimate mc_nu(double r, const Alternative& alt, std::size_t triples, std::uint64_t seed) {
  Rng rng(seed, 0x1234);
  const std::size_t nbatch = 20;
  const std::size_t per = triples / nbatch;
  double bsum = 0.0, bsum2 = 0.0;
  for (std::size_t b = 0; b < nbatch; ++b) {
    double sum_hh = 0.0, sum_h = 0.0;
    for (std::size_t i = 0; i < per; ++i) {
      B3 x1 = draw_support(rng, alt);
      B3 x2 = draw_support(rng, alt);
      B3 x3 = draw_support(rng, alt);
      int h12 = arc(x1, x2, r) + arc(x2, x1, r);
      int h13 = arc(x1, x3, r) + arc(x3, x1, r);
      sum_hh += h12 * h13;
      sum_h += h12;
    }
    double m = sum_h / static_cast<double>(per);
    double c = sum_hh / static_cast<double>(per) - m * m;
    bsum += c;
    bsum2 += c * c;
  }
  double mean = bsum / nbatch;
  double var = std::max(0.0, bsum2 / nbatch - mean * mean);
  return {mean, std::sqrt(var / (nbatch - 1))};
}

McEstimate mc_var_h(double r, std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed, 0x7777);
  const std::size_t nbatch = 20;
  const std::size_t per = pairs / nbatch;
  double bsum = 0.0, bsum2 = 0.0;
  for (std::size_t b = 0; b < nbatch; ++b) {
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < per; ++i) {
      B3 x = draw(rng);
      B3 z = draw(rng);
      int h = arc(x, z, r) + arc(z, x, r);
      s += h;
      s2 += h * h;
    }
    double m = s / static_cast<double>(per);
    double v = s2 / static_cast<double>(per) - m * m;
    bsum += v;
    bsum2 += v * v;
  }
  double mean = bsum / nbatch;
  double var = std::max(0.0, bsum2 / nbatch - mean * mean);
  return {mean, std::sqrt(var / (nbatch - 1))};
}

McEstimate mc_var_rho(double r, std::size_t n, std::size_t replicates, std::uint64_t seed) {
  Triangle tri = standard_triangle();
  Expansion e = Expansion::of(r);
  const double denom = static_cast<double>(n) * static_cast<double>(n - 1);
  std::vector<double> rho(replicates);
  for (std::size_t i = 0; i < replicates; ++i) {
    Rng rng(seed, i);
    auto pts = sample_uniform_triangle(tri, n, rng);
    rho[i] = static_cast<double>(count_arcs(tri, e, pts)) / denom;
  }
  SampleStats st = sample_stats(rho);
  // SE of the sample variance via the fourth moment
  double m4 = 0.0;
  for (double v : rho) m4 += std::pow(v - st.mean, 4);
  m4 /= static_cast<double>(replicates);
  double se = std::sqrt(std::max(0.0, m4 - st.variance * st.variance) /
                        static_cast<double>(replicates));
  return {st.variance, se};
}

double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  double en = std::sqrt(na * nb / (na + nb));
  double t = (en + 0.12 + 0.11 / en) * d;
  // Kolmogorov tail sum
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) p += 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * t * t);
  return std::clamp(p, 0.0, 1.0);
}

SampleStats sample_stats(const std::vector<double>& v) {
  SampleStats st;
  if (v.empty()) return st;
  const double n = static_cast<double>(v.size());
  for (double x : v) st.mean += x;
  st.mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : v) {
    double d = x - st.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  st.variance = m2 * n / (n - 1.0);
  st.skewness = m3 / std::pow(m2, 1.5);
  st.kurtosis = m4 / (m2 * m2) - 3.0;
  return st;
}

}  // namespace rpcd::oracle
