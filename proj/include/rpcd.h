/* Public C API for the r-factor proximity catch digraph library.
 *
 * All functions return RPCD_OK on success; on failure they return an error
 * code and leave a message retrievable with rpcd_last_error() (thread-local).
 * Handles are opaque and must be released with their destroy function.
 */
#ifndef RPCD_H
#define RPCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RPCD_API __declspec(dllexport)
#else
#define RPCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rpcd_status {
  RPCD_OK = 0,
  RPCD_ERR_INVALID = 1,  /* bad argument / configuration */
  RPCD_ERR_DOMAIN = 2,   /* out of mathematical domain (r < 1, eps range, ...) */
  RPCD_ERR_DATA = 3,     /* bad data (point outside triangle/hull, collinear sites) */
  RPCD_ERR_NOMEM = 4
} rpcd_status;

RPCD_API const char* rpcd_last_error(void);
RPCD_API const char* rpcd_version(void);

/* r = infinity is encoded explicitly. */
#define RPCD_R_INFINITE (-1.0)

typedef enum rpcd_alt_kind {
  RPCD_NULL = 0,
  RPCD_SEGREGATION = 1,
  RPCD_ASSOCIATION = 2
} rpcd_alt_kind;

/* ---------- analytic moment and efficacy curves ---------- */

RPCD_API rpcd_status rpcd_mu_null(double r, double* out);
RPCD_API rpcd_status rpcd_nu_null(double r, double* out);
RPCD_API rpcd_status rpcd_var_h(double r, double* out);
RPCD_API rpcd_status rpcd_var_rho(double r, long n, double* out);

RPCD_API rpcd_status rpcd_mu_alt(rpcd_alt_kind kind, double r, double eps, double* out);
/* Closed-form alternative variance; only the six tabulated eps are available.
 * degenerate is set to 1 (and *out to 0) where the density is degenerate. */
RPCD_API rpcd_status rpcd_nu_alt(rpcd_alt_kind kind, double r, double eps, double* out,
                                 int* degenerate);
RPCD_API rpcd_status rpcd_mu_dd(rpcd_alt_kind kind, double r, double* out);
RPCD_API rpcd_status rpcd_degeneracy_threshold(double eps, double* out);
RPCD_API rpcd_status rpcd_delta_to_epsilon(double delta, double* out);

RPCD_API rpcd_status rpcd_pae(rpcd_alt_kind kind, double r, double* out);
RPCD_API rpcd_status rpcd_hlae(rpcd_alt_kind kind, double r, double eps, double* out,
                               int* infinite);
RPCD_API rpcd_status rpcd_power(rpcd_alt_kind kind, double r, long n, double eps, double alpha,
                                double* out);

/* weights: length j_count, positive, summing to 1 */
RPCD_API rpcd_status rpcd_pae_multi(rpcd_alt_kind kind, double r, const double* weights,
                                    size_t j_count, double* out);
RPCD_API rpcd_status rpcd_hlae_multi(rpcd_alt_kind kind, double r, double eps,
                                     const double* weights, size_t j_count, double* out,
                                     int* infinite);
RPCD_API rpcd_status rpcd_moments_multi(double r, const double* weights, size_t j_count,
                                        double* mu_j, double* nu_j);
RPCD_API rpcd_status rpcd_adjusted_variance(double r, const double* weights, size_t j_count,
                                            long n, double* out);

/* ---------- meshes ---------- */

typedef struct rpcd_mesh rpcd_mesh;

/* sites: 2*n_sites doubles (x0,y0,x1,y1,...); requires >= 3 non-collinear */
RPCD_API rpcd_status rpcd_mesh_create(const double* sites_xy, size_t n_sites, rpcd_mesh** out);
RPCD_API void rpcd_mesh_destroy(rpcd_mesh* mesh);
RPCD_API size_t rpcd_mesh_triangle_count(const rpcd_mesh* mesh);
RPCD_API size_t rpcd_mesh_site_count(const rpcd_mesh* mesh);
RPCD_API rpcd_status rpcd_mesh_triangle(const rpcd_mesh* mesh, size_t j, int site_index[3],
                                        double* weight);
RPCD_API rpcd_status rpcd_mesh_hull_area(const rpcd_mesh* mesh, double* out);
/* index of the triangle containing (x,y), or -1 outside the hull */
RPCD_API rpcd_status rpcd_mesh_locate(const rpcd_mesh* mesh, double x, double y, int* out);

/* ---------- the conditional test ---------- */

typedef struct rpcd_test_report {
  double rho;
  double rho_adjusted;
  double u_stat;
  double mu0;
  double nu0;
  double z;
  double p_seg;    /* NaN when degenerate */
  double p_assoc;  /* NaN when degenerate */
  double alpha;
  uint64_t arc_count;
  size_t n;
  size_t j_count;
  int degenerate;
  int reject_seg;
  int reject_assoc;
} rpcd_test_report;

/* points: 2*n doubles; r may be RPCD_R_INFINITE */
RPCD_API rpcd_status rpcd_test(const rpcd_mesh* mesh, double r, const double* points_xy,
                               size_t n, double alpha, rpcd_test_report* out);

/* ---------- Monte Carlo engine (standard triangle) ---------- */

typedef struct rpcd_mc_config {
  size_t n;           /* sample size per replicate */
  size_t replicates;  /* N */
  double r;           /* RPCD_R_INFINITE allowed */
  rpcd_alt_kind alt;
  double eps;         /* ignored for RPCD_NULL */
  double alpha;
  uint64_t seed;
  int use_asymptotic_cv;
  int threads;        /* 0 = hardware default */
} rpcd_mc_config;

typedef struct rpcd_mc_result {
  double critical_value;
  double empirical_alpha;
  double empirical_power;
} rpcd_mc_result;

RPCD_API rpcd_status rpcd_mc_run(const rpcd_mc_config* cfg, rpcd_mc_result* out);
/* Density replicates in replicate-id order: fills min(cap, N) values under the
 * null (under_alternative = 0) or the configured alternative (1). */
RPCD_API rpcd_status rpcd_mc_replicates(const rpcd_mc_config* cfg, int under_alternative,
                                        double* out, size_t cap, size_t* written);
/* Mesh-conditional variant of rpcd_mc_run (uniform over the hull). */
RPCD_API rpcd_status rpcd_mc_run_mesh(const rpcd_mesh* mesh, const rpcd_mc_config* cfg,
                                      rpcd_mc_result* out);

/* ---------- sampling ---------- */

/* Standard-triangle samples under the null / an alternative; out has 2*n. */
RPCD_API rpcd_status rpcd_sample(rpcd_alt_kind kind, double eps, size_t n, uint64_t seed,
                                 double* out_xy);
RPCD_API rpcd_status rpcd_sample_mesh(const rpcd_mesh* mesh, rpcd_alt_kind kind, double eps,
                                      size_t n, uint64_t seed, double* out_xy);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RPCD_H */
