#pragma once

#include <span>
#include <vector>

#include "geom.hpp"

namespace rpcd::moments {

/// One interval [lo, hi) of a piecewise rational function of r. Numerator and
/// denominator coefficients are ascending powers of r, entered once from the
/// source tables; the transcription-audit test walks these pieces directly.
struct RationalPiece {
  double lo;
  double hi;
  std::vector<double> num;
  std::vector<double> den;
};

double eval_piece(const RationalPiece& p, double r);

struct MomentValue {
  double value = 0.0;
  bool degenerate = false;
  int piece_index = -1;  // regime bookkeeping
};

// ----- null curves -----

/// Mean arc probability mu(r) = P(X2 in N^r(X1)); mu(inf) = 1.
double mu_null(double r);
double mu_null(Expansion e);

/// Asymptotic variance nu(r) = Cov[h12, h13]; nu(inf) = 0.
double nu_null(double r);
double nu_null(Expansion e);

/// omega(r) = Var[h12]; omega(inf) = 0.
double var_h_null(double r);
double var_h_null(Expansion e);

/// Var[rho_n] = omega(r)/(2 n (n-1)) + (n-2) nu(r) / (n (n-1)); n >= 2.
double var_rho(double r, long n);

// ----- alternative means (all eps in [0, sqrt(3)/3)) -----

double mu_seg(double r, double eps);
double mu_assoc(double r, double eps);

/// d^2/d eps^2 at eps = 0.
double mu_seg_dd(double r);
double mu_assoc_dd(double r);

/// Smallest r at which rho_n(r) is degenerate under segregation(eps):
/// sqrt(3)/(2 eps) for eps <= sqrt(3)/4, else sqrt(3)/eps - 2. Returns +inf
/// (flagged via isinf) for eps = 0.
double degeneracy_threshold_seg(double eps);

// ----- alternative variances, closed forms at the six tabulated eps only -----

inline constexpr int kNumSegKeys = 3;
inline constexpr int kNumAssocKeys = 3;
double seg_key_eps(int k);    // sqrt3/8, sqrt3/4, 2 sqrt3/7
double assoc_key_eps(int k);  // 5 sqrt3/24, sqrt3/12, sqrt3/21

/// Closed-form Cov[h12,h13] under segregation at one of the tabulated eps.
/// Throws std::domain_error for any other eps ("no closed form; use MC").
MomentValue nu_seg_at(double r, double eps);
MomentValue nu_assoc_at(double r, double eps);

// mean-table counterparts (piecewise-rational means at the tabulated eps; same
// values as mu_seg/mu_assoc, kept as independently entered tables)
double mu_seg_at(double r, double eps);
double mu_assoc_at(double r, double eps);

// ----- piece introspection for the transcription audit -----

std::span<const RationalPiece> mu_null_pieces();
std::span<const RationalPiece> nu_null_pieces();
std::span<const RationalPiece> var_h_pieces();
std::span<const RationalPiece> nu_seg_pieces(int key);
std::span<const RationalPiece> nu_assoc_pieces(int key);
std::span<const RationalPiece> mu_seg_key_pieces(int key);
std::span<const RationalPiece> mu_assoc_key_pieces(int key);

/// General-eps mean pieces: concrete [lo,hi) intervals once eps is fixed.
struct AltMeanPiece {
  double lo;
  double hi;
  double (*f)(double r, double eps);
};
std::vector<AltMeanPiece> mu_seg_pieces(double eps);
std::vector<AltMeanPiece> mu_assoc_pieces(double eps);

}  // namespace rpcd::moments
