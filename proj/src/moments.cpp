#include "moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rpcd::moments {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kInf = std::numeric_limits<double>::infinity();

double horner(std::span<const double> c, double r) {
  double s = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * r + c[i];
  return s;
}

double eval_table(std::span<const RationalPiece> pieces, double r, int* index = nullptr) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].lo <= r && r < pieces[i].hi) {
      if (index) *index = static_cast<int>(i);
      return eval_piece(pieces[i], r);
    }
  }
  throw std::domain_error("r outside table domain");
}

void require_r(double r) {
  if (!(r >= 1.0)) throw std::domain_error("requires r >= 1");
}

void require_eps(double eps) {
  if (!(eps >= 0.0) || !(eps < kSqrt3 / 3.0)) throw std::domain_error("eps outside [0, sqrt(3)/3)");
}

// denominator helpers
std::vector<double> mono(double c, int pow) {
  std::vector<double> d(static_cast<std::size_t>(pow) + 1, 0.0);
  d[static_cast<std::size_t>(pow)] = c;
  return d;
}

}  // namespace

double eval_piece(const RationalPiece& p, double r) {
  return horner(p.num, r) / horner(p.den, r);
}

// ---------------------------------------------------------------- null mean

std::span<const RationalPiece> mu_null_pieces() {
  static const std::vector<RationalPiece> t = {
      {1.0, 1.5, {0, 0, 37}, {216}},
      {1.5, 2.0, {36, -64, 32, 0, -1}, mono(8, 2)},
      {2.0, kInf, {-3, 0, 2}, mono(2, 2)},
  };
  return t;
}

double mu_null(double r) {
  require_r(r);
  return eval_table(mu_null_pieces(), r);
}

double mu_null(Expansion e) { return e.infinite ? 1.0 : mu_null(e.r); }

// ------------------------------------------------------------ null variance

std::span<const RationalPiece> nu_null_pieces() {
  static const std::vector<RationalPiece> t = {
      {1.0, 4.0 / 3.0,
       {3888, 0, -38880, 60480, -24246, 48888, -117953, 77760, 898, -13824, 3007},
       mono(58320, 4)},
      {4.0 / 3.0, 1.5,
       {15552, 0, -155520, 241920, 13608, -191520, 46588, 0, 61912, -37800, 5467},
       mono(233280, 4)},
      {1.5, 2.0,
       {-8640, 27648, -103232, 242176, -273600, 139264, -13704, -15072, 5332, 0, -312, 72, -7},
       mono(960, 6)},
      {2.0, kInf, {25, -48, -11, 0, 15}, mono(15, 6)},
  };
  return t;
}

double nu_null(double r) {
  require_r(r);
  return eval_table(nu_null_pieces(), r);
}

double nu_null(Expansion e) { return e.infinite ? 0.0 : nu_null(e.r); }

// ------------------------------------------------------------- Var[h12]

std::span<const RationalPiece> var_h_pieces() {
  static const std::vector<RationalPiece> t = {
      // denominators carry the (r+1)(r+2) factors of the source, expanded
      {1.0, 4.0 / 3.0,
       {55296, -155520, 23328, 182736, -161784, 78084, -902, -4107, -1369},
       {0, 0, 23328, 34992, 11664}},
      {4.0 / 3.0, 1.5,
       {-72576, 57888, 79056, -132624, 98496, -9650, -4107, -1369},
       {0, 23328, 34992, 11664}},
      {1.5, 2.0,
       {-2208, 3856, 1168, -5424, 1824, 1704, -968, 0, 62, -3, -1},
       {0, 0, 0, 0, 32, 48, 16}},
      {2.0, kInf, {-13, 3, 3, 3}, {0, 0, 0, 0, 1, 1}},
  };
  return t;
}

double var_h_null(double r) {
  require_r(r);
  return eval_table(var_h_pieces(), r);
}

double var_h_null(Expansion e) { return e.infinite ? 0.0 : var_h_null(e.r); }

double var_rho(double r, long n) {
  if (n < 2) throw std::invalid_argument("var_rho requires n >= 2");
  const double nn = static_cast<double>(n);
  return var_h_null(r) / (2.0 * nn * (nn - 1.0)) + (nn - 2.0) / (nn * (nn - 1.0)) * nu_null(r);
}

// --------------------------------------------- segregation mean, general eps

namespace segmean {

double w11(double r, double E) {
  double n = (576 * r * r - 1152) * std::pow(E, 4) - 37 * r * r + 288 * E * E;
  double d = 216 * (2 * E + 1) * (2 * E + 1) * (2 * E - 1) * (2 * E - 1);
  return -n / d;
}

double w12(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 576 * r4 * E4 - 1152 * r2 * E4 + 91 * r4 + 512 * kSqrt3 * r3 * E + 2592 * r2 * E2 +
             1536 * kSqrt3 * r * E3 + 1152 * E4 - 768 * r3 - 2304 * kSqrt3 * r2 * E -
             6912 * r * E2 - 2304 * kSqrt3 * E3 + 1728 * r2 + 3456 * kSqrt3 * r * E + 5184 * E2 -
             1728 * r - 1728 * kSqrt3 * E + 648;
  double d = 216 * r2 * (4 * E2 - 1) * (4 * E2 - 1);
  return -n / d;
}

double w13(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r4 = r2 * r2;
  double n = 192 * r4 * E4 - 384 * r2 * E4 + 9 * r4 + 864 * r2 * E2 + 512 * kSqrt3 * r * E3 +
             384 * E4 - 2304 * r * E2 - 768 * kSqrt3 * E3 - 288 * r2 + 1728 * E2 + 576 * r - 324;
  return -n / (72 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w14(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 192 * r4 * E4 - 384 * r2 * E4 - 9 * r4 - 96 * kSqrt3 * r3 * E + 288 * r2 * E2 -
             128 * E4 + 144 * r3 + 576 * kSqrt3 * r2 * E + 256 * kSqrt3 * E3 - 720 * r2 -
             1152 * kSqrt3 * r * E - 576 * E2 + 1152 * r + 768 * kSqrt3 * E - 612;
  return -n / (72 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w15(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r4 = r2 * r2;
  double n = 48 * r4 * E4 - 96 * r2 * E4 + 72 * r2 * E2 - 32 * E4 + 64 * kSqrt3 * E3 - 18 * r2 -
             144 * E2 + 27;
  return -n / (18 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w16(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 48 * r4 * E4 + 256 * r3 * E4 - 128 * kSqrt3 * r3 * E3 + 288 * r2 * E4 -
             192 * kSqrt3 * r2 * E3 + 72 * r2 * E2 + 18 * r2 + 48 * kSqrt3 * E - 45;
  return n / (18 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w23(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 576 * r4 * E4 - 1152 * r2 * E4 + 37 * r4 + 224 * kSqrt3 * r3 * E + 864 * r2 * E2 -
             384 * E4 - 336 * r3 - 576 * kSqrt3 * r2 * E + 768 * kSqrt3 * E3 + 432 * r2 -
             1728 * E2 + 576 * kSqrt3 * E - 216;
  return -n / (216 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w33(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r;
  double n = 576 * r2 * E4 + 3072 * r * E4 - 1536 * kSqrt3 * r * E3 + 3456 * E4 -
             2304 * kSqrt3 * E3 - 37 * r2 - 224 * kSqrt3 * r * E + 864 * E2 + 336 * r +
             576 * kSqrt3 * E - 432;
  return n / (216 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w34(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 192 * r4 * E4 + 1024 * r3 * E4 - 512 * kSqrt3 * r3 * E3 + 1152 * r2 * E4 -
             768 * kSqrt3 * r2 * E3 + 9 * r4 + 96 * kSqrt3 * r3 * E + 288 * r2 * E2 - 144 * r3 -
             576 * kSqrt3 * r2 * E + 720 * r2 + 1152 * kSqrt3 * r * E - 1152 * r -
             576 * kSqrt3 * E + 540;
  return n / (72 * r2 * (4 * E2 - 1) * (4 * E2 - 1));
}

double w41(double r, double E) {
  double E2 = E * E;
  double n = 9 * r * r * E2 + 2 * kSqrt3 * r * r * E + 48 * r * E2 + r * r - 16 * kSqrt3 * r * E -
             90 * E2 - 12 * r + 36 * kSqrt3 * E;
  double d = 3 * E - kSqrt3;
  return -n / (18 * d * d);
}

double w42(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 9 * r4 * E4 - 4 * kSqrt3 * r4 * E3 + 48 * r3 * E4 - 48 * kSqrt3 * r3 * E3 -
             90 * r2 * E4 + 36 * r3 * E2 + 96 * kSqrt3 * r2 * E3 - 126 * r2 * E2 -
             32 * kSqrt3 * r * E3 - 48 * E4 + 36 * kSqrt3 * r2 * E + 144 * r * E2 +
             96 * kSqrt3 * E3 - 18 * r2 - 72 * kSqrt3 * r * E - 216 * E2 + 36 * r +
             72 * kSqrt3 * E - 27;
  double d = 3 * E - kSqrt3;
  double d4 = d * d * d * d;
  return -n / (2 * d4 * r2);
}

double one(double, double) { return 1.0; }

}  // namespace segmean

std::vector<AltMeanPiece> mu_seg_pieces(double eps) {
  using namespace segmean;
  require_eps(eps);
  if (eps == 0.0)
    return {{1.0, 1.5, w11}, {1.5, 2.0, w13}, {2.0, kInf, w15}};
  const double rd = kSqrt3 / (2 * eps);
  if (eps < kSqrt3 / 8)
    return {{1.0, 1.5 - kSqrt3 * eps, w11}, {1.5 - kSqrt3 * eps, 1.5, w12},
            {1.5, 2 - 4 * eps / kSqrt3, w13}, {2 - 4 * eps / kSqrt3, 2.0, w14},
            {2.0, rd - 1, w15},               {rd - 1, rd, w16},
            {rd, kInf, one}};
  if (eps < kSqrt3 / 6)
    return {{1.0, 1.5 - kSqrt3 * eps, w11}, {1.5 - kSqrt3 * eps, 2 - 4 * eps / kSqrt3, w12},
            {2 - 4 * eps / kSqrt3, 1.5, w23}, {1.5, 2.0, w14},
            {2.0, rd - 1, w15},               {rd - 1, rd, w16},
            {rd, kInf, one}};
  if (eps < kSqrt3 / 4)
    return {{1.0, 2 - 4 * eps / kSqrt3, w12}, {2 - 4 * eps / kSqrt3, rd - 1, w23},
            {rd - 1, 1.5, w33},               {1.5, 2.0, w34},
            {2.0, rd, w16},                   {rd, kInf, one}};
  // eps in [sqrt3/4, sqrt3/3); degeneracy at sqrt3/eps - 2
  return {{1.0, 3 - 2 * kSqrt3 * eps, w41},
          {3 - 2 * kSqrt3 * eps, kSqrt3 / eps - 2, w42},
          {kSqrt3 / eps - 2, kInf, one}};
}

double mu_seg(double r, double eps) {
  require_r(r);
  for (const auto& p : mu_seg_pieces(eps))
    if (p.lo <= r && r < p.hi) return p.f(r, eps);
  return 1.0;
}

// --------------------------------------------- association mean, general eps

namespace assocmean {

double w11(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 3456 * E4 * r4 + 9216 * E4 * r3 - 3072 * kSqrt3 * E3 * r4 - 17280 * E4 * r2 -
             3072 * kSqrt3 * E3 * r3 + 2304 * E2 * r4 + 4608 * kSqrt3 * E3 * r2 -
             2304 * E2 * r3 + 6336 * E4 + 6144 * kSqrt3 * E3 * r + 6912 * E2 * r2 +
             512 * kSqrt3 * E * r3 - 101 * r4 - 6144 * kSqrt3 * E3 - 11520 * E2 * r -
             1536 * kSqrt3 * E * r2 + 256 * r3 + 5760 * E2 + 1536 * kSqrt3 * E * r - 384 * r2 -
             512 * kSqrt3 * E + 256 * r - 64;
  double d = (36 * E2 - 3);
  return -n / (24 * d * d * r2);
}

double w12(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r4 = r2 * r2;
  double n = 1728 * E4 * r4 - 1536 * kSqrt3 * E3 * r4 - 31104 * E4 * r2 + 1152 * E2 * r4 +
             15552 * E4 + 10368 * E2 * r2 - 37 * r4 - 20736 * E2 * r + 10368 * E2;
  double d = (36 * E2 - 3);
  return -n / (24 * d * d * r2);
}

double w13(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = -2592 * E4 * r4 - 2304 * kSqrt3 * E3 * r4 - 46656 * E4 * r2 + 1728 * E2 * r4 +
             10656 * E4 - 9216 * kSqrt3 * E3 * r + 9072 * E2 * r2 - 432 * kSqrt3 * E * r3 -
             15 * r4 + 12288 * kSqrt3 * E3 - 13824 * E2 * r + 1728 * kSqrt3 * E * r2 - 216 * r3 +
             4032 * E2 - 2304 * kSqrt3 * E * r + 432 * r2 + 1024 * kSqrt3 * E - 384 * r + 128;
  double d = (36 * E2 - 3);
  return n / (36 * d * d * r2);
}

double w14(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r4 = r2 * r2;
  double n = 1728 * E4 * r4 - 1536 * kSqrt3 * E3 * r4 - 31104 * E4 * r2 + 1152 * E2 * r4 -
             5184 * E4 + 2592 * E2 * r2 - 37 * r4 - 3456 * E2;
  double d = (36 * E2 - 3);
  return -n / (24 * d * d * r2);
}

double w15(double r, double E) {
  double E2 = E * E, E4 = E2 * E2;
  double r2 = r * r, r4 = r2 * r2;
  double n = 1152 * E4 * r2 + 192 * E4 - 192 * E2 * r2 - r4 + 128 * E2 + 32 * r2 - 64 * r + 36;
  double d = (36 * E2 - 3);
  return 9.0 / 8.0 * n / (d * d * r2);
}

// The printed piece for r >= 2 is garbled in the source; this is the unique
// antiderivative of the stated d/d eps formula that matches the null curve at
// eps = 0 (it also reproduces the sqrt3/21 and sqrt3/12 key tables).
double w16(double r, double E) {
  return 1.0 + (1.0 / 6.0 + 5.0 / (3.0 * (12 * E * E - 1.0))) / (r * r);
}

double w22(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = -3456 * E2 * r4 + 111 * r4 - 5184 * E4 * r4 + 4608 * kSqrt3 * E3 * r4 -
             336 * kSqrt3 * E * r3 - 168 * r3 - 13824 * E4 * r3 + 4608 * kSqrt3 * E3 * r3 +
             3456 * E2 * r3 + 144 * r2 - 6912 * kSqrt3 * E3 * r2 - 3888 * E2 * r2 +
             576 * kSqrt3 * E * r2 + 25920 * E4 * r2 + 3168 * E4 + 2880 * E2 - 256 * kSqrt3 * E -
             32 - 3072 * kSqrt3 * E3;
  double d = (36 * E2 - 3);
  return n / (36 * d * d * r2);
}

double w31(double r, double) { return (2 * r * r - 1) / (6 * r * r); }

double w32(double r, double E) {
  double E2 = E * E, E3 = E2 * E, E4 = E2 * E2;
  double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  double n = 432 * E4 * r4 + 1152 * E4 * r3 - 576 * kSqrt3 * E3 * r4 + 1296 * E4 * r2 -
             960 * kSqrt3 * E3 * r3 + 864 * E2 * r4 - 864 * kSqrt3 * E3 * r2 + 576 * E2 * r3 -
             192 * kSqrt3 * E * r4 - 360 * E4 + 648 * E2 * r2 + 64 * kSqrt3 * E * r3 + 48 * r4 +
             192 * kSqrt3 * E3 - 144 * kSqrt3 * E * r2 - 64 * r3 - 504 * E2 + 72 * r2 +
             88 * kSqrt3 * E - 25;
  double d = 3 * E - kSqrt3;
  double d4 = d * d * d * d;
  return n / (16 * d4 * r2);
}

double w33(double r, double E) {
  double E2 = E * E;
  double n = -54 * E2 * r * r + 36 * kSqrt3 * E * r * r + 15 * E2 - 18 * r * r +
             2 * kSqrt3 * E + 20;
  double d = kSqrt3 - 3 * E;
  return -n / (6 * d * d * r * r);
}

}  // namespace assocmean

std::vector<AltMeanPiece> mu_assoc_pieces(double eps) {
  using namespace assocmean;
  require_eps(eps);
  if (eps == 0.0)
    return {{1.0, 1.5, segmean::w11}, {1.5, 2.0, segmean::w13}, {2.0, kInf, segmean::w15}};
  const double t = kSqrt3 * eps;
  static const double kRegime1Hi = (7 * kSqrt3 - 3 * std::sqrt(15.0)) / 12;  // ~.042
  if (eps < kRegime1Hi)
    return {{1.0, (1 + 2 * t) / (1 - t), w11},
            {(1 + 2 * t) / (1 - t), 4 * (1 - t) / 3, w12},
            {4 * (1 - t) / 3, 4 * (1 + 2 * t) / 3, w13},
            {4 * (1 + 2 * t) / 3, 3 / (2 * (1 - t)), w14},
            {3 / (2 * (1 - t)), 2.0, w15},
            {2.0, kInf, w16}};
  if (eps < kSqrt3 / 12)
    return {{1.0, 4 * (1 - t) / 3, w11},
            {4 * (1 - t) / 3, (1 + 2 * t) / (1 - t), w22},
            {(1 + 2 * t) / (1 - t), 4 * (1 + 2 * t) / 3, w13},
            {4 * (1 + 2 * t) / 3, 3 / (2 * (1 - t)), w14},
            {3 / (2 * (1 - t)), 2.0, w15},
            {2.0, kInf, w16}};
  return {{1.0, (1 + 2 * t) / (2 * (1 - t)), w31},
          {(1 + 2 * t) / (2 * (1 - t)), 3 / (2 * (1 - t)), w32},
          {3 / (2 * (1 - t)), kInf, w33}};
}

double mu_assoc(double r, double eps) {
  require_r(r);
  for (const auto& p : mu_assoc_pieces(eps))
    if (p.lo <= r && r < p.hi) return p.f(r, eps);
  throw std::domain_error("r outside table domain");
}

// --------------------------------------------------- second derivatives at 0

double mu_seg_dd(double r) {
  require_r(r);
  if (r < 1.5) return -8.0 / 3.0 + 74.0 / 27.0 * r * r;
  if (r < 2.0) return -2.0 * (r * r - 4 * r + 2) * (r * r + 4 * r - 6) / (r * r);
  return 8.0 * (r * r - 1.0) / (r * r);
}

double mu_assoc_dd(double r) {
  require_r(r);
  if (r < 4.0 / 3.0) return -22.0 / 9.0 * r * r + 192.0 / r - 96.0 / (r * r) - 96.0;
  if (r < 1.5) return -22.0 / 9.0 * r * r + 32.0 / (r * r) - 24.0;
  if (r < 2.0) return -6.0 * r * r - 384.0 / r + 248.0 / (r * r) + 144.0;
  return -40.0 / (r * r);
}

double degeneracy_threshold_seg(double eps) {
  require_eps(eps);
  if (eps == 0.0) return kInf;
  if (eps <= kSqrt3 / 4.0) return kSqrt3 / (2.0 * eps);
  return kSqrt3 / eps - 2.0;
}

// ---------------------------------------------------- specific-eps tables

double seg_key_eps(int k) {
  switch (k) {
    case 0: return kSqrt3 / 8.0;
    case 1: return kSqrt3 / 4.0;
    case 2: return 2.0 * kSqrt3 / 7.0;
  }
  throw std::out_of_range("segregation key");
}

double assoc_key_eps(int k) {
  switch (k) {
    case 0: return 5.0 * kSqrt3 / 24.0;
    case 1: return kSqrt3 / 12.0;
    case 2: return kSqrt3 / 21.0;
  }
  throw std::out_of_range("association key");
}

namespace {

int match_key(double eps, double (*key_eps)(int), int count) {
  for (int k = 0; k < count; ++k)
    if (std::abs(eps - key_eps(k)) <= 1e-9) return k;
  return -1;
}

const double kSqrt6 = std::sqrt(6.0);
const double kSqrt14 = std::sqrt(14.0);

}  // namespace

std::span<const RationalPiece> mu_seg_key_pieces(int key) {
  static const std::vector<RationalPiece> k8 = {
      {1.0, 9.0 / 8.0, {-702, 0, 2287}, {9126}},
      {9.0 / 8.0, 1.5, {-13122, 46656, -62910, 36864, -5905}, mono(9126, 2)},
      {1.5, 2.0, {2466, -5120, 3494, -768, 61}, mono(338, 2)},
      {2.0, 3.0, {-606, 0, 422, 0, -3}, mono(338, 2)},
      {3.0, 4.0, {-768, 0, 530, -48, 3}, mono(338, 2)},
      {4.0, kInf, {1}, {1}},
  };
  static const std::vector<RationalPiece> k4 = {
      {1.0, 1.5, {-162, 240, -67}, {54}},
      {1.5, 2.0, {48, -128, 122, -48, 7}, mono(2, 2)},
      {2.0, kInf, {1}, {1}},
  };
  static const std::vector<RationalPiece> k27 = {
      {1.0, 9.0 / 7.0, {-432, 684, -241}, {54}},
      {9.0 / 7.0, 1.5, {243, -756, 866, -432, 80}, mono(2, 2)},
      {1.5, kInf, {1}, {1}},
  };
  switch (key) {
    case 0: return k8;
    case 1: return k4;
    case 2: return k27;
  }
  throw std::out_of_range("segregation key");
}

std::span<const RationalPiece> mu_assoc_key_pieces(int key) {
  static const std::vector<RationalPiece> k524 = {
      {1.0, 3.0, {-1, 0, 2}, mono(6, 2)},
      {3.0, 4.0, {-55, 0, 38, -16, 2}, mono(6, 2)},
      {4.0, kInf, {-55, 0, 6}, mono(6, 2)},
  };
  static const std::vector<RationalPiece> k12 = {
      {1.0, 2.0, {-5, 0, 18, -16, 6}, mono(18, 2)},
      {2.0, kInf, {-37, 0, 18}, mono(18, 2)},
  };
  static const std::vector<RationalPiece> k21 = {
      {1.0, 8.0 / 7.0, {9216, -35840, 49152, -27648, 7839}, mono(16200, 2)},
      {8.0 / 7.0, 1.5, {-3072, 0, 11520, -11184, 5438}, mono(16200, 2)},
      {1.5, 12.0 / 7.0, {-18624, 48384, -43776, 16464, 318}, mono(16200, 2)},
      {12.0 / 7.0, 7.0 / 4.0, {2112, 0, -1440, 0, 2719}, mono(16200, 2)},
      {7.0 / 4.0, 2.0, {88548, -153664, 73824, 0, -2401}, mono(16200, 2)},
      {2.0, kInf, {-89, 0, 54}, mono(54, 2)},
  };
  switch (key) {
    case 0: return k524;
    case 1: return k12;
    case 2: return k21;
  }
  throw std::out_of_range("association key");
}

std::span<const RationalPiece> nu_seg_pieces(int key) {
  static const std::vector<RationalPiece> k8 = {
      {1.0, 12.0 / 11.0,
       {12939264, 0, -129392640, 201277440, -83976048, 162699264, -385799609, 258785280,
        -430526, -46006272, 9959911},
       mono(104104845, 4)},
      {12.0 / 11.0, 9.0 / 8.0,
       {90574848, -310542336, 315394560, -16174080, -158725008, 272331072, -415110891,
        258785280, -430526, -46006272, 9959911},
       mono(104104845, 4)},
      {9.0 / 8.0, kSqrt6 / 2.0,
       {-373071582, 1989715104, -6790168926, 19903426272, -42745183272, 60339341664,
        -54792387144, 31878202752, -11800111467, 2750459904, -378655166, 15335424, 3144167},
       mono(104104845, 6)},
      {kSqrt6 / 2.0, 21.0 / 16.0,
       {-170415414, 1694942496, -7379714142, 20886001632, -42131073672, 59029241184,
        -55010737224, 32751603072, -11854698987, 2459326464, -320428478, 54153216, -8177689},
       mono(104104845, 6)},
      {21.0 / 16.0, 4.0 / 3.0,
       {-170415414, 1694942496, -10724592861, 36176875776, -71256548232, 88617024864,
        -71918042184, 37904305536, -12509010411, 2459326464, -320428478, 54153216, -8177689},
       mono(104104845, 6)},
      {4.0 / 3.0, 1.5,
       {-170415414, 1694942496, -10828106973, 36487418112, -71547681672, 88893062496,
        -72881433288, 39680803584, -14086429683, 3154811904, -434455742, 39596544, -2718937},
       mono(104104845, 6)},
      {1.5, kSqrt3,
       {-5845554, 20431008, -109133095, 343186304, -553668600, 511170304, -289042360,
        103077696, -23210081, 3265792, -295626, 19968, -1027},
       mono(428415, 6)},
      {kSqrt3, 7.0 / 4.0,
       {-5788692, 20431008, -109133095, 343186304, -553700190, 511170304, -289042360,
        103077696, -23199551, 3265792, -299370, 19968, -637},
       mono(428415, 6)},
      {7.0 / 4.0, 2.0,
       {-5788692, 20431008, -133604087, 427086848, -673558110, 602490624, -328179640,
        112023360, -24051519, 3265792, -299370, 19968, -637},
       mono(428415, 6)},
      {2.0, 3.0,
       {-37908, 303264, -5083895, 5324800, -1993566, 26624, 1075400, -1010880, 452225,
        -122720, 22134, -2496, 130},
       mono(428415, 6)},
      {3.0, 3.5,
       {-6678947, 5324800, 1180986, -1148560, -332000, 342624, -85445, 8896, -330},
       mono(428415, 4)},
      // -(330 r^5 - 4936 r^4 + 12453 r^3 + 47388 r^2 - 12992 r - 128256)(r-4)^3 / (428415 r^4)
      {3.5, 4.0,
       {-8208384, 5324800, 2117376, -1505280, -332000, 360096, -87525, 8896, -330},
       mono(428415, 4)},
  };
  static const std::vector<RationalPiece> k4 = {
      {1.0, 9.0 / 8.0,
       {-165888, 880794, -1876608, 2021199, -1106688, 233266, 28224, -14285},
       mono(3645, 1)},
      {9.0 / 8.0, 9.0 / 7.0,
       {-1594323, 8503056, -18895680, 22228992, -14049126, 3431808, 1234767, -1106688,
        233266, 28224, -14285},
       mono(3645, 4)},
      {9.0 / 7.0, 4.0 / 3.0,
       {1594323, -8503056, 18305190, -20636208, 13456044, -5903280, 2545713, -1106688,
        233266, 28224, -14285},
       mono(3645, 4)},
      {4.0 / 3.0, 1.5,
       {6377292, -34012224, 73220760, -81881280, 50174640, -15844032, 1992132, -111072,
        104920, -27072, 1909},
       mono(14580, 4)},
      {1.5, 2.0,
       {-56016, 198144, -433304, 705536, -955392, 1187904, -1331492, 1308960, -1118472,
        850240, -611163, 387680, -175984, 46176, -5120},
       mono(20, 4)},
  };
  static const std::vector<RationalPiece> k27 = {
      {1.0, 15.0 / 14.0,
       {-16336404, 90317349, -202262778, 230713503, -134149248, 29145379, 5067342, -2495087},
       mono(14580, 1)},
      {15.0 / 14.0, 15.0 / 13.0,
       {-136687500, 765450000, -1786050000, 2206303596, -1465530651, 378587142, 140359071,
        -134149248, 29145379, 5067342, -2495087},
       mono(14580, 4)},
      {15.0 / 13.0, 7.0 / 6.0,
       {136687500, -765450000, 1767825000, -2174176404, 1559738349, -731864538, 309668679,
        -134149248, 29145379, 5067342, -2495087},
       mono(14580, 4)},
      {7.0 / 6.0, 1.25,
       {136687500, -765450000, 1767825000, -2157840000, 1468526760, -527363136, 77561559,
        -654768, 1000147, -321426, 24337},
       mono(14580, 4)},
      {1.25, 9.0 / 7.0,
       {-1137240, 2649024, -1567017, -654768, 1000147, -321426, 24337},
       {14580}},
      // -(8 r^6 - 106 r^5 + 8709 r^4 - 39684 r^3 + 68000 r^2 - 51192 r + 14256)(2 r - 3)^4 / (20 r^4)
      {9.0 / 7.0, 1.5,
       {-1154736, 7225848, -19644768, 30328452, -29107701, 17808546, -6802352, 1495632,
        -151248, 2464, -128},
       mono(20, 4)},
  };
  switch (key) {
    case 0: return k8;
    case 1: return k4;
    case 2: return k27;
  }
  throw std::out_of_range("segregation key");
}

std::span<const RationalPiece> nu_assoc_pieces(int key) {
  static const std::vector<RationalPiece> k524 = {
      {1.0, 3.0, {1, 0, -2, 0, 1}, mono(27, 6)},
      {3.0, 3.5,
       {7305, -23328, -47172, -138240, 248577, -74880, -58754, 50304, -15340, 2176, -120},
       mono(405, 6)},
      {3.5, 2.0 + kSqrt3,
       {7305, -23328, 70477, -138240, 176547, -47440, -58754, 48960, -15180, 2176, -120},
       mono(405, 6)},
      {2.0 + kSqrt3, 4.0,
       {7315, -23520, 71917, -143360, 184137, -46480, -69986, 49920, -7590, -2944, 1320,
        -192, 10},
       mono(405, 6)},
      {4.0, kInf, {9265, -16032, -7601, 0, 787}, mono(135, 6)},
  };
  static const std::vector<RationalPiece> k12 = {
      {1.0, 1.5,
       {35, -144, 540, -1280, 1383, 240, -2650, 3360, -1830, 192, 240, -96, 10},
       mono(405, 6)},
      {1.5, 2.0,
       {35, -144, 1269, -1280, -1047, 2400, -2650, 2784, -1670, 192, 240, -96, 10},
       mono(405, 6)},
      {2.0, kInf, {1315, -2448, -683, 0, 537}, mono(405, 6)},
  };
  static const std::vector<RationalPiece> k21 = {
      {1.0, 2.0 * kSqrt14 / 7.0,
       {25952256, -43352064, -209048784, 995033088, -2387433568, 4050858048, -4721848374,
        3532359672, -1592672721, 369129408, -389826, -22708224, 4124031},
       mono(65610000, 6)},
      {2.0 * kSqrt14 / 7.0, 8.0 / 7.0,
       {-8650752, 14450688, -93443280, 778272768, -2522908768, 4366966848, -4669163574,
        3311083512, -1578842961, 441735648, -14911074, -31178952, 6594660},
       mono(65610000, 6)},
      {8.0 / 7.0, 1.25,
       {1966080, -7225344, 24413592, -52684800, 47304144, 27338184, -128355690, 165877272,
        -104968680, 18467640, 14155864, -7118748, 826701},
       mono(32805000, 6)},
      {1.25, 4.0 / 3.0,
       {1966080, -7225344, 240413592, -1262284800, 2840904144, -3382581816, 2194076310,
        -671672808, 20074008, 18467640, 14155864, -7118748, 826701},
       mono(32805000, 6)},
      {4.0 / 3.0, 10.0 / 7.0,
       {1966080, -7225344, -335586408, 1560115200, -2883095856, 2773418184, -1511673690,
        512952192, -137116617, 18467640, 14155864, -7118748, 826701},
       mono(32805000, 6)},
      {10.0 / 7.0, 1.5,
       {1966080, -7225344, 48413592, -52684800, -60695856, 139178184, -128697690, 125718912,
        -91939401, 18467640, 14155864, -7118748, 826701},
       mono(32805000, 6)},
      {1.5, 12.0 / 7.0,
       {4761088, -7633920, -24048504, 238099456, -684036240, 944809880, -711864862,
        311364480, -87678147, 17196648, 334536, -1426740, 226415},
       mono(10935000, 6)},
      {12.0 / 7.0, 7.0 / 4.0,
       {-29061120, 67608576, -194460480, 147517440, -93614976, 171413760, 132202536,
        -300043296, 51865788, 0, 76274888, -42712488, 5786907},
       mono(262440000, 6)},
      {7.0 / 4.0, 2.0,
       {-3078523200, 9825887232, -40552466112, 97335694848, -109663683136, 55820599296,
        -6150612888, -5449924256, 1958438076, 0, -112001848, 25412184, -2470629},
       mono(262440000, 6)},
      {2.0, kInf, {929955, -1765008, -433645, 0, 493829}, mono(455625, 6)},
  };
  switch (key) {
    case 0: return k524;
    case 1: return k12;
    case 2: return k21;
  }
  throw std::out_of_range("association key");
}

// ------------------------------------------------------- keyed evaluators

double mu_seg_at(double r, double eps) {
  require_r(r);
  int k = match_key(eps, seg_key_eps, kNumSegKeys);
  if (k < 0) throw std::domain_error("no closed-form table at this eps; use Monte Carlo");
  return eval_table(mu_seg_key_pieces(k), r);
}

double mu_assoc_at(double r, double eps) {
  require_r(r);
  int k = match_key(eps, assoc_key_eps, kNumAssocKeys);
  if (k < 0) throw std::domain_error("no closed-form table at this eps; use Monte Carlo");
  return eval_table(mu_assoc_key_pieces(k), r);
}

MomentValue nu_seg_at(double r, double eps) {
  require_r(r);
  int k = match_key(eps, seg_key_eps, kNumSegKeys);
  if (k < 0) throw std::domain_error("no closed-form table at this eps; use Monte Carlo");
  const double rd = degeneracy_threshold_seg(seg_key_eps(k));
  if (r >= rd) return {0.0, true, -1};
  MomentValue mv;
  mv.value = eval_table(nu_seg_pieces(k), r, &mv.piece_index);
  return mv;
}

MomentValue nu_assoc_at(double r, double eps) {
  require_r(r);
  int k = match_key(eps, assoc_key_eps, kNumAssocKeys);
  if (k < 0) throw std::domain_error("no closed-form table at this eps; use Monte Carlo");
  // rho_n(1) is degenerate under association with eps >= sqrt(3)/12
  if (r == 1.0 && assoc_key_eps(k) >= kSqrt3 / 12.0 - 1e-12) return {0.0, true, -1};
  MomentValue mv;
  mv.value = eval_table(nu_assoc_pieces(k), r, &mv.piece_index);
  return mv;
}

}  // namespace rpcd::moments
