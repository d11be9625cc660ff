#include "sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rpcd {

namespace {
const double kSqrt3 = std::sqrt(3.0);

// min over j of d(y_j, line through p parallel to edge opposite y_j), in the
// standard triangle; equals (sqrt3/2) * (1 - beta_j).
double min_vertex_height(const Bary& w) {
  double m = 1.0 - w[0];
  m = std::min(m, 1.0 - w[1]);
  m = std::min(m, 1.0 - w[2]);
  return (kSqrt3 / 2.0) * m;
}
}  // namespace

Alternative Alternative::segregation(double eps) {
  if (!(eps > 0.0) || eps > max_eps()) throw std::domain_error("eps outside (0, sqrt(3)/3)");
  return {AltKind::kSegregation, eps};
}

Alternative Alternative::association(double eps) {
  if (!(eps > 0.0) || eps > max_eps()) throw std::domain_error("eps outside (0, sqrt(3)/3)");
  return {AltKind::kAssociation, eps};
}

double max_eps() { return kSqrt3 / 3.0 - 1e-6; }

double delta_to_epsilon(double delta) {
  if (!(delta > 0.0) || !(delta < 4.0 / 9.0)) throw std::domain_error("delta outside (0, 4/9)");
  return std::sqrt(3.0 * delta / 4.0);
}

std::vector<Point> sample_uniform_triangle(const Triangle& tri, std::size_t n, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  const auto& v = tri.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    double u = rng.next_double();
    double w = rng.next_double();
    if (u + w > 1.0) {
      u = 1.0 - u;
      w = 1.0 - w;
    }
    pts.push_back({v[0].x + u * (v[1].x - v[0].x) + w * (v[2].x - v[0].x),
                   v[0].y + u * (v[1].y - v[0].y) + w * (v[2].y - v[0].y)});
  }
  return pts;
}

bool in_alternative_support(const Triangle& tri, const Alternative& alt, Point p) {
  if (alt.kind == AltKind::kNull) return tri.contains(p);
  if (!tri.contains(p)) return false;
  double h = min_vertex_height(tri.barycentric(p));
  if (alt.kind == AltKind::kSegregation) return h > alt.eps;
  return h <= kSqrt3 / 3.0 - alt.eps;
}

std::vector<Point> sample_alternative(const Triangle& tri, const Alternative& alt,
                                      std::size_t n, Rng& rng) {
  if (alt.kind == AltKind::kNull) return sample_uniform_triangle(tri, n, rng);
  if (!(alt.eps > 0.0) || alt.eps > max_eps()) throw std::domain_error("eps outside (0, sqrt(3)/3)");
  std::vector<Point> pts;
  pts.reserve(n);
  const auto& v = tri.vertices();
  // rejection from uniform; support fractions stay workable away from the
  // forbidden eps limit
  std::size_t guard = 0;
  const std::size_t max_tries = 2000ull * n + 1000000ull;
  while (pts.size() < n) {
    if (++guard > max_tries) throw std::runtime_error("alternative support too thin for rejection sampling");
    double u = rng.next_double();
    double w = rng.next_double();
    if (u + w > 1.0) {
      u = 1.0 - u;
      w = 1.0 - w;
    }
    Bary b{{1.0 - u - w, u, w}};
    double h = min_vertex_height(b);
    bool ok = alt.kind == AltKind::kSegregation ? h > alt.eps : h <= kSqrt3 / 3.0 - alt.eps;
    if (!ok) continue;
    pts.push_back({v[0].x + u * (v[1].x - v[0].x) + w * (v[2].x - v[0].x),
                   v[0].y + u * (v[1].y - v[0].y) + w * (v[2].y - v[0].y)});
  }
  return pts;
}

}  // namespace rpcd
