#include "inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "moments.hpp"
#include "normal.hpp"

namespace rpcd {

namespace {

// deterministic parallel map: slot i is always produced by stream i
template <typename F>
void parallel_replicates(std::size_t count, int threads, F&& fill) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nt = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
  nt = std::min<std::size_t>(nt, count ? count : 1);
  if (nt <= 1) {
    for (std::size_t i = 0; i < count; ++i) fill(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([=, &fill] {
      for (std::size_t i = t; i < count; i += nt) fill(i);
    });
  }
  for (auto& th : pool) th.join();
}

void finish_report(TestReport& rep) {
  if (rep.nu0 > 0.0 && rep.n >= 2) {
    rep.z = std::sqrt(static_cast<double>(rep.n)) * (rep.rho - rep.mu0) / std::sqrt(rep.nu0);
    rep.p_seg = 1.0 - norm_cdf(rep.z);
    rep.p_assoc = norm_cdf(rep.z);
    rep.reject_seg = rep.p_seg < rep.alpha;
    rep.reject_assoc = rep.p_assoc < rep.alpha;
  } else {
    rep.degenerate = true;
    rep.z = 0.0;
    rep.p_seg = rep.p_assoc = std::numeric_limits<double>::quiet_NaN();  // suppressed
  }
}

double order_stat(const std::vector<double>& sorted, std::size_t k1) {
  // 1-based order statistic, clamped into range
  if (sorted.empty()) throw std::invalid_argument("no replicates");
  std::size_t idx = std::min(std::max<std::size_t>(k1, 1), sorted.size()) - 1;
  return sorted[idx];
}

}  // namespace

TestReport asymptotic_test(const Triangle& tri, Expansion e, const std::vector<Point>& points,
                           double alpha) {
  if (points.size() < 2) throw std::invalid_argument("test requires n >= 2");
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::domain_error("alpha outside (0,1)");
  Digraph d = build_digraph(tri, e, points);
  DensityResult rho = relative_density(d);
  TestReport rep;
  rep.alpha = alpha;
  rep.n = rho.n;
  rep.arc_count = rho.arc_count;
  rep.rho = rho.rho;
  rep.rho_adjusted = rho.rho;
  rep.u_stat = rho.rho;
  rep.mu0 = moments::mu_null(e);
  rep.nu0 = moments::nu_null(e);
  finish_report(rep);
  return rep;
}

TestReport asymptotic_test(const DelaunayMesh& mesh, Expansion e,
                           const std::vector<Point>& points, double alpha) {
  if (points.size() < 2) throw std::invalid_argument("test requires n >= 2");
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::domain_error("alpha outside (0,1)");
  MultiDensity md = density_multi(mesh, e, points);
  MultiMoments mm = e.infinite ? MultiMoments{0.0, 0.0} : moments_multi(e.r, mesh.weights);
  TestReport rep;
  rep.alpha = alpha;
  rep.n = md.n;
  rep.arc_count = md.arc_count;
  rep.rho = md.rho;
  rep.rho_adjusted = md.adjusted;
  rep.u_stat = md.u_stat;
  rep.j_count = mesh.size();
  if (e.infinite) {
    double w2 = 0.0;
    for (double w : mesh.weights) w2 += w * w;
    rep.mu0 = w2;  // complete within every cell
    rep.nu0 = 0.0;
  } else {
    rep.mu0 = mm.mu;
    rep.nu0 = mm.nu;
  }
  finish_report(rep);
  return rep;
}

std::vector<double> mc_replicates(const McConfig& cfg, bool under_alternative) {
  if (cfg.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (cfg.n < 2) throw std::invalid_argument("n must be >= 2");
  Triangle tri = standard_triangle();
  Expansion e = cfg.infinite_r ? Expansion::inf() : Expansion::of(cfg.r);
  Alternative alt = under_alternative ? cfg.alt : Alternative::null();
  const double denom = static_cast<double>(cfg.n) * static_cast<double>(cfg.n - 1);
  std::vector<double> rho(cfg.replicates);
  // distinct stream halves for null and alternative replicates
  const std::uint64_t base = under_alternative ? 0x8000000000000000ull : 0ull;
  parallel_replicates(cfg.replicates, cfg.threads, [&](std::size_t i) {
    Rng rng(cfg.seed, base + i);
    std::vector<Point> pts = sample_alternative(tri, alt, cfg.n, rng);
    rho[i] = static_cast<double>(count_arcs(tri, e, pts)) / denom;
  });
  return rho;
}

McResult mc_critical_value(const McConfig& cfg) {
  McResult res;
  res.null_rho = mc_replicates(cfg, false);
  std::sort(res.null_rho.begin(), res.null_rho.end());
  const double N = static_cast<double>(cfg.replicates);
  const bool assoc = cfg.alt.kind == AltKind::kAssociation;
  if (assoc) {
    res.critical_value = order_stat(res.null_rho, static_cast<std::size_t>(std::floor(cfg.alpha * N)));
    std::size_t cnt = 0;
    for (double v : res.null_rho) cnt += v < res.critical_value;
    res.empirical_alpha = static_cast<double>(cnt) / N;
  } else {
    res.critical_value =
        order_stat(res.null_rho, static_cast<std::size_t>(std::ceil((1.0 - cfg.alpha) * N)));
    std::size_t cnt = 0;
    for (double v : res.null_rho) cnt += v > res.critical_value;
    res.empirical_alpha = static_cast<double>(cnt) / N;
  }
  return res;
}

namespace {

// power from standardized comparisons (asymptotic critical value)
double asymptotic_power(const McConfig& cfg, const std::vector<double>& alt_rho) {
  double mu0 = cfg.infinite_r ? 1.0 : moments::mu_null(cfg.r);
  double nu0 = cfg.infinite_r ? 0.0 : moments::nu_null(cfg.r);
  if (!(nu0 > 0.0)) throw std::domain_error("degenerate null variance for asymptotic CV");
  const bool assoc = cfg.alt.kind == AltKind::kAssociation;
  double zcrit = norm_quantile(1.0 - cfg.alpha);
  double root_n = std::sqrt(static_cast<double>(cfg.n));
  std::size_t cnt = 0;
  for (double v : alt_rho) {
    double z = root_n * (v - mu0) / std::sqrt(nu0);
    cnt += assoc ? (z < -zcrit) : (z > zcrit);
  }
  return static_cast<double>(cnt) / static_cast<double>(alt_rho.size());
}

}  // namespace

McResult mc_power(const McConfig& cfg, std::optional<double> critical_value) {
  if (cfg.alt.kind == AltKind::kNull) throw std::invalid_argument("power requires an alternative");
  McResult res;
  res.alt_rho = mc_replicates(cfg, true);
  if (cfg.use_asymptotic_cv) {
    res.empirical_power = asymptotic_power(cfg, res.alt_rho);
    std::sort(res.alt_rho.begin(), res.alt_rho.end());
    return res;
  }
  double cv;
  if (critical_value) {
    cv = *critical_value;
    res.critical_value = cv;
  } else {
    McResult nullres = mc_critical_value(cfg);
    res.null_rho = std::move(nullres.null_rho);
    res.critical_value = nullres.critical_value;
    res.empirical_alpha = nullres.empirical_alpha;
    cv = nullres.critical_value;
  }
  const bool assoc = cfg.alt.kind == AltKind::kAssociation;
  std::size_t cnt = 0;
  for (double v : res.alt_rho) cnt += assoc ? (v < cv) : (v > cv);
  res.empirical_power = static_cast<double>(cnt) / static_cast<double>(res.alt_rho.size());
  std::sort(res.alt_rho.begin(), res.alt_rho.end());
  return res;
}

McResult mc_study(const McConfig& cfg) {
  if (cfg.alt.kind == AltKind::kNull) {
    McResult res = mc_critical_value(cfg);
    if (cfg.use_asymptotic_cv) {
      McConfig seg = cfg;
      seg.alt.kind = AltKind::kSegregation;  // direction only; replicates stay null
      res.empirical_alpha = asymptotic_power(seg, res.null_rho);
    }
    res.empirical_power = res.empirical_alpha;  // power under H0 equals size
    return res;
  }
  if (cfg.use_asymptotic_cv) {
    McResult res = mc_power(cfg);
    // empirical size of the same standardized test under H0
    std::vector<double> nulls = mc_replicates(cfg, false);
    res.empirical_alpha = asymptotic_power(cfg, nulls);
    res.null_rho = std::move(nulls);
    std::sort(res.null_rho.begin(), res.null_rho.end());
    return res;
  }
  return mc_power(cfg);
}

std::vector<double> consistency_probe(double r, const Alternative& alt,
                                      const std::vector<std::size_t>& ns, std::size_t replicates,
                                      double alpha, std::uint64_t seed) {
  std::vector<double> powers;
  powers.reserve(ns.size());
  for (std::size_t k = 0; k < ns.size(); ++k) {
    McConfig cfg;
    cfg.n = ns[k];
    cfg.replicates = replicates;
    cfg.r = r;
    cfg.alt = alt;
    cfg.alpha = alpha;
    cfg.seed = seed + k;
    powers.push_back(alt.kind == AltKind::kNull ? mc_critical_value(cfg).empirical_alpha
                                                : mc_power(cfg).empirical_power);
  }
  return powers;
}

namespace {

std::vector<double> mesh_replicates(const DelaunayMesh& mesh, const McConfig& cfg,
                                    bool under_alternative) {
  Expansion e = cfg.infinite_r ? Expansion::inf() : Expansion::of(cfg.r);
  Alternative alt = under_alternative ? cfg.alt : Alternative::null();
  const double denom = static_cast<double>(cfg.n) * static_cast<double>(cfg.n - 1);
  std::vector<double> rho(cfg.replicates);
  const std::uint64_t base = under_alternative ? 0x8000000000000000ull : 0ull;
  parallel_replicates(cfg.replicates, cfg.threads, [&](std::size_t i) {
    Rng rng(cfg.seed, base + i);
    std::vector<Point> pts = sample_hull(mesh, alt, cfg.n, rng);
    MultiDensity md = density_multi(mesh, e, pts);
    rho[i] = static_cast<double>(md.arc_count) / denom;
  });
  return rho;
}

}  // namespace

McResult mc_critical_value(const DelaunayMesh& mesh, const McConfig& cfg) {
  McResult res;
  res.null_rho = mesh_replicates(mesh, cfg, false);
  std::sort(res.null_rho.begin(), res.null_rho.end());
  const double N = static_cast<double>(cfg.replicates);
  const bool assoc = cfg.alt.kind == AltKind::kAssociation;
  if (assoc) {
    res.critical_value = order_stat(res.null_rho, static_cast<std::size_t>(std::floor(cfg.alpha * N)));
    std::size_t cnt = 0;
    for (double v : res.null_rho) cnt += v < res.critical_value;
    res.empirical_alpha = static_cast<double>(cnt) / N;
  } else {
    res.critical_value =
        order_stat(res.null_rho, static_cast<std::size_t>(std::ceil((1.0 - cfg.alpha) * N)));
    std::size_t cnt = 0;
    for (double v : res.null_rho) cnt += v > res.critical_value;
    res.empirical_alpha = static_cast<double>(cnt) / N;
  }
  return res;
}

McResult mc_power(const DelaunayMesh& mesh, const McConfig& cfg,
                  std::optional<double> critical_value) {
  if (cfg.alt.kind == AltKind::kNull) throw std::invalid_argument("power requires an alternative");
  McResult res;
  res.alt_rho = mesh_replicates(mesh, cfg, true);
  if (cfg.use_asymptotic_cv) {
    MultiMoments mm = moments_multi(cfg.r, mesh.weights);
    if (!(mm.nu > 0.0)) throw std::domain_error("degenerate conditional variance");
    const bool assoc = cfg.alt.kind == AltKind::kAssociation;
    double zcrit = norm_quantile(1.0 - cfg.alpha);
    double root_n = std::sqrt(static_cast<double>(cfg.n));
    std::size_t cnt = 0;
    for (double v : res.alt_rho) {
      double z = root_n * (v - mm.mu) / std::sqrt(mm.nu);
      cnt += assoc ? (z < -zcrit) : (z > zcrit);
    }
    res.empirical_power = static_cast<double>(cnt) / static_cast<double>(res.alt_rho.size());
    std::sort(res.alt_rho.begin(), res.alt_rho.end());
    return res;
  }
  double cv;
  if (critical_value) {
    cv = *critical_value;
    res.critical_value = cv;
  } else {
    McResult nullres = mc_critical_value(mesh, cfg);
    res.null_rho = std::move(nullres.null_rho);
    res.critical_value = nullres.critical_value;
    res.empirical_alpha = nullres.empirical_alpha;
    cv = nullres.critical_value;
  }
  const bool assoc = cfg.alt.kind == AltKind::kAssociation;
  std::size_t cnt = 0;
  for (double v : res.alt_rho) cnt += assoc ? (v < cv) : (v > cv);
  res.empirical_power = static_cast<double>(cnt) / static_cast<double>(res.alt_rho.size());
  std::sort(res.alt_rho.begin(), res.alt_rho.end());
  return res;
}

}  // namespace rpcd
