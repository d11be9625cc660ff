#include "rpcd.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "delaunay.hpp"
#include "digraph.hpp"
#include "efficacy.hpp"
#include "inference.hpp"
#include "moments.hpp"
#include "multi.hpp"
#include "normal.hpp"
#include "sampling.hpp"

namespace {

thread_local std::string g_last_error;

rpcd_status fail(rpcd_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename F>
rpcd_status guarded(F&& f) {
  try {
    f();
    return RPCD_OK;
  } catch (const std::domain_error& e) {
    return fail(RPCD_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RPCD_ERR_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(RPCD_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RPCD_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(RPCD_ERR_DATA, e.what());
  }
}

rpcd::Expansion to_expansion(double r) {
  if (r == RPCD_R_INFINITE) return rpcd::Expansion::inf();
  return rpcd::Expansion::of(r);
}

rpcd::Alternative to_alt(rpcd_alt_kind kind, double eps) {
  switch (kind) {
    case RPCD_NULL: return rpcd::Alternative::null();
    case RPCD_SEGREGATION: return rpcd::Alternative::segregation(eps);
    case RPCD_ASSOCIATION: return rpcd::Alternative::association(eps);
  }
  throw std::invalid_argument("unknown alternative kind");
}

std::vector<rpcd::Point> to_points(const double* xy, size_t n) {
  if (n > 0 && !xy) throw std::invalid_argument("null point buffer");
  std::vector<rpcd::Point> pts(n);
  for (size_t i = 0; i < n; ++i) pts[i] = {xy[2 * i], xy[2 * i + 1]};
  return pts;
}

rpcd::McConfig to_cfg(const rpcd_mc_config* cfg) {
  if (!cfg) throw std::invalid_argument("null config");
  rpcd::McConfig c;
  c.n = cfg->n;
  c.replicates = cfg->replicates;
  if (cfg->r == RPCD_R_INFINITE) {
    c.infinite_r = true;
  } else {
    if (!(cfg->r >= 1.0)) throw std::domain_error("requires r >= 1");
    c.r = cfg->r;
  }
  c.alt = to_alt(cfg->alt, cfg->eps);
  if (!(cfg->alpha > 0.0) || !(cfg->alpha < 1.0)) throw std::domain_error("alpha outside (0,1)");
  c.alpha = cfg->alpha;
  c.seed = cfg->seed;
  c.use_asymptotic_cv = cfg->use_asymptotic_cv != 0;
  c.threads = cfg->threads;
  return c;
}

void fill_report(const rpcd::TestReport& rep, rpcd_test_report* out) {
  out->rho = rep.rho;
  out->rho_adjusted = rep.rho_adjusted;
  out->u_stat = rep.u_stat;
  out->mu0 = rep.mu0;
  out->nu0 = rep.nu0;
  out->z = rep.z;
  out->p_seg = rep.p_seg;
  out->p_assoc = rep.p_assoc;
  out->alpha = rep.alpha;
  out->arc_count = rep.arc_count;
  out->n = rep.n;
  out->j_count = rep.j_count;
  out->degenerate = rep.degenerate ? 1 : 0;
  out->reject_seg = rep.reject_seg ? 1 : 0;
  out->reject_assoc = rep.reject_assoc ? 1 : 0;
}

}  // namespace

struct rpcd_mesh {
  rpcd::DelaunayMesh mesh;
};

extern "C" {

const char* rpcd_last_error(void) { return g_last_error.c_str(); }

const char* rpcd_version(void) { return "0.1.0"; }

rpcd_status rpcd_mu_null(double r, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::moments::mu_null(to_expansion(r));
  });
}

rpcd_status rpcd_nu_null(double r, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::moments::nu_null(to_expansion(r));
  });
}

rpcd_status rpcd_var_h(double r, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::moments::var_h_null(to_expansion(r));
  });
}

rpcd_status rpcd_var_rho(double r, long n, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::moments::var_rho(r, n);
  });
}

rpcd_status rpcd_mu_alt(rpcd_alt_kind kind, double r, double eps, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    if (kind == RPCD_NULL)
      *out = rpcd::moments::mu_null(r);
    else if (kind == RPCD_SEGREGATION)
      *out = rpcd::moments::mu_seg(r, eps);
    else
      *out = rpcd::moments::mu_assoc(r, eps);
  });
}

rpcd_status rpcd_nu_alt(rpcd_alt_kind kind, double r, double eps, double* out, int* degenerate) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    rpcd::moments::MomentValue mv;
    if (kind == RPCD_SEGREGATION)
      mv = rpcd::moments::nu_seg_at(r, eps);
    else if (kind == RPCD_ASSOCIATION)
      mv = rpcd::moments::nu_assoc_at(r, eps);
    else
      mv = {rpcd::moments::nu_null(r), false, -1};
    *out = mv.value;
    if (degenerate) *degenerate = mv.degenerate ? 1 : 0;
  });
}

rpcd_status rpcd_mu_dd(rpcd_alt_kind kind, double r, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    if (kind == RPCD_SEGREGATION)
      *out = rpcd::moments::mu_seg_dd(r);
    else if (kind == RPCD_ASSOCIATION)
      *out = rpcd::moments::mu_assoc_dd(r);
    else
      throw std::invalid_argument("second derivative requires an alternative kind");
  });
}

rpcd_status rpcd_degeneracy_threshold(double eps, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::moments::degeneracy_threshold_seg(eps);
  });
}

rpcd_status rpcd_delta_to_epsilon(double delta, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    *out = rpcd::delta_to_epsilon(delta);
  });
}

rpcd_status rpcd_pae(rpcd_alt_kind kind, double r, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    if (kind == RPCD_SEGREGATION)
      *out = rpcd::efficacy::pae_seg(r);
    else if (kind == RPCD_ASSOCIATION)
      *out = rpcd::efficacy::pae_assoc(r);
    else
      throw std::invalid_argument("PAE requires an alternative kind");
  });
}

rpcd_status rpcd_hlae(rpcd_alt_kind kind, double r, double eps, double* out, int* infinite) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    auto e = rpcd::efficacy::hlae(r, to_alt(kind, eps));
    *out = e.value;
    if (infinite) *infinite = e.infinite ? 1 : 0;
  });
}

rpcd_status rpcd_power(rpcd_alt_kind kind, double r, long n, double eps, double alpha,
                       double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    if (kind == RPCD_SEGREGATION)
      *out = rpcd::efficacy::power_seg(r, n, eps, alpha);
    else if (kind == RPCD_ASSOCIATION)
      *out = rpcd::efficacy::power_assoc(r, n, eps, alpha);
    else
      throw std::invalid_argument("power requires an alternative kind");
  });
}

rpcd_status rpcd_pae_multi(rpcd_alt_kind kind, double r, const double* weights, size_t j_count,
                           double* out) {
  return guarded([&] {
    if (!out || !weights) throw std::invalid_argument("null argument");
    std::span<const double> w(weights, j_count);
    if (kind == RPCD_SEGREGATION)
      *out = rpcd::efficacy::pae_seg_multi(r, w);
    else if (kind == RPCD_ASSOCIATION)
      *out = rpcd::efficacy::pae_assoc_multi(r, w);
    else
      throw std::invalid_argument("PAE requires an alternative kind");
  });
}

rpcd_status rpcd_hlae_multi(rpcd_alt_kind kind, double r, double eps, const double* weights,
                            size_t j_count, double* out, int* infinite) {
  return guarded([&] {
    if (!out || !weights) throw std::invalid_argument("null argument");
    auto e = rpcd::efficacy::hlae_multi(r, to_alt(kind, eps), {weights, j_count});
    *out = e.value;
    if (infinite) *infinite = e.infinite ? 1 : 0;
  });
}

rpcd_status rpcd_moments_multi(double r, const double* weights, size_t j_count, double* mu_j,
                               double* nu_j) {
  return guarded([&] {
    if (!weights || !mu_j || !nu_j) throw std::invalid_argument("null argument");
    auto mm = rpcd::moments_multi(r, {weights, j_count});
    *mu_j = mm.mu;
    *nu_j = mm.nu;
  });
}

rpcd_status rpcd_adjusted_variance(double r, const double* weights, size_t j_count, long n,
                                   double* out) {
  return guarded([&] {
    if (!weights || !out) throw std::invalid_argument("null argument");
    *out = rpcd::adjusted_variance(r, {weights, j_count}, n);
  });
}

rpcd_status rpcd_mesh_create(const double* sites_xy, size_t n_sites, rpcd_mesh** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    auto mesh = rpcd::triangulate(to_points(sites_xy, n_sites));
    *out = new rpcd_mesh{std::move(mesh)};
  });
}

void rpcd_mesh_destroy(rpcd_mesh* mesh) { delete mesh; }

size_t rpcd_mesh_triangle_count(const rpcd_mesh* mesh) { return mesh ? mesh->mesh.size() : 0; }

size_t rpcd_mesh_site_count(const rpcd_mesh* mesh) { return mesh ? mesh->mesh.sites.size() : 0; }

rpcd_status rpcd_mesh_triangle(const rpcd_mesh* mesh, size_t j, int site_index[3],
                               double* weight) {
  return guarded([&] {
    if (!mesh) throw std::invalid_argument("null mesh");
    if (j >= mesh->mesh.size()) throw std::out_of_range("triangle index");
    if (site_index)
      for (int k = 0; k < 3; ++k) site_index[k] = mesh->mesh.triangles[j][static_cast<std::size_t>(k)];
    if (weight) *weight = mesh->mesh.weights[j];
  });
}

rpcd_status rpcd_mesh_hull_area(const rpcd_mesh* mesh, double* out) {
  return guarded([&] {
    if (!mesh || !out) throw std::invalid_argument("null argument");
    *out = mesh->mesh.hull_area;
  });
}

rpcd_status rpcd_mesh_locate(const rpcd_mesh* mesh, double x, double y, int* out) {
  return guarded([&] {
    if (!mesh || !out) throw std::invalid_argument("null argument");
    *out = mesh->mesh.locate({x, y});
  });
}

rpcd_status rpcd_test(const rpcd_mesh* mesh, double r, const double* points_xy, size_t n,
                      double alpha, rpcd_test_report* out) {
  return guarded([&] {
    if (!mesh || !out) throw std::invalid_argument("null argument");
    auto pts = to_points(points_xy, n);
    auto rep = rpcd::asymptotic_test(mesh->mesh, to_expansion(r), pts, alpha);
    fill_report(rep, out);
  });
}

rpcd_status rpcd_mc_run(const rpcd_mc_config* cfg, rpcd_mc_result* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    auto res = rpcd::mc_study(to_cfg(cfg));
    *out = {res.critical_value, res.empirical_alpha, res.empirical_power};
  });
}

rpcd_status rpcd_mc_replicates(const rpcd_mc_config* cfg, int under_alternative, double* out,
                               size_t cap, size_t* written) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null output");
    auto rho = rpcd::mc_replicates(to_cfg(cfg), under_alternative != 0);
    size_t k = std::min(cap, rho.size());
    std::memcpy(out, rho.data(), k * sizeof(double));
    if (written) *written = k;
  });
}

rpcd_status rpcd_mc_run_mesh(const rpcd_mesh* mesh, const rpcd_mc_config* cfg,
                             rpcd_mc_result* out) {
  return guarded([&] {
    if (!mesh || !out) throw std::invalid_argument("null argument");
    rpcd::McConfig c = to_cfg(cfg);
    rpcd::McResult res;
    if (c.alt.kind == rpcd::AltKind::kNull) {
      res = rpcd::mc_critical_value(mesh->mesh, c);
      res.empirical_power = res.empirical_alpha;
    } else {
      res = rpcd::mc_power(mesh->mesh, c);
      if (c.use_asymptotic_cv) {
        // size of the standardized test under H0, same direction as c.alt
        rpcd::McConfig nullc = c;
        nullc.alt = rpcd::Alternative::null();
        auto nulls = rpcd::mc_critical_value(mesh->mesh, nullc);
        auto mm = rpcd::moments_multi(c.r, mesh->mesh.weights);
        double zcrit = rpcd::norm_quantile(1.0 - c.alpha);
        std::size_t cnt = 0;
        for (double v : nulls.null_rho) {
          double z = std::sqrt(static_cast<double>(c.n)) * (v - mm.mu) / std::sqrt(mm.nu);
          cnt += c.alt.kind == rpcd::AltKind::kAssociation ? (z < -zcrit) : (z > zcrit);
        }
        res.empirical_alpha = static_cast<double>(cnt) / static_cast<double>(nulls.null_rho.size());
      }
    }
    *out = {res.critical_value, res.empirical_alpha, res.empirical_power};
  });
}

rpcd_status rpcd_sample(rpcd_alt_kind kind, double eps, size_t n, uint64_t seed,
                        double* out_xy) {
  return guarded([&] {
    if (n > 0 && !out_xy) throw std::invalid_argument("null output");
    rpcd::Rng rng(seed, 0);
    auto pts = rpcd::sample_alternative(rpcd::standard_triangle(), to_alt(kind, eps), n, rng);
    for (size_t i = 0; i < n; ++i) {
      out_xy[2 * i] = pts[i].x;
      out_xy[2 * i + 1] = pts[i].y;
    }
  });
}

rpcd_status rpcd_sample_mesh(const rpcd_mesh* mesh, rpcd_alt_kind kind, double eps, size_t n,
                             uint64_t seed, double* out_xy) {
  return guarded([&] {
    if (!mesh || (n > 0 && !out_xy)) throw std::invalid_argument("null argument");
    rpcd::Rng rng(seed, 0);
    auto pts = rpcd::sample_hull(mesh->mesh, to_alt(kind, eps), n, rng);
    for (size_t i = 0; i < n; ++i) {
      out_xy[2 * i] = pts[i].x;
      out_xy[2 * i + 1] = pts[i].y;
    }
  });
}

}  // extern "C"
