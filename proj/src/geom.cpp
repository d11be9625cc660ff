#include "geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rpcd {

Expansion Expansion::of(double r) {
  if (!(r >= 1.0)) throw std::domain_error("expansion factor must satisfy r >= 1");
  return {r, false};
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
  det_ = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  area_ = 0.5 * std::abs(det_);
  double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                           std::abs(c.x), std::abs(c.y), 1.0});
  if (!(area_ > 1e-14 * scale * scale)) throw std::invalid_argument("collinear vertices");
  cm_ = {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
  mid_ = {Point{(b.x + c.x) / 2, (b.y + c.y) / 2},  // opposite vertex 0
          Point{(a.x + c.x) / 2, (a.y + c.y) / 2},
          Point{(a.x + b.x) / 2, (a.y + b.y) / 2}};
}

Bary Triangle::barycentric(Point p) const {
  const Point &a = v_[0], &b = v_[1], &c = v_[2];
  double b1 = ((b.x - p.x) * (c.y - p.y) - (c.x - p.x) * (b.y - p.y)) / det_;
  double b2 = ((c.x - p.x) * (a.y - p.y) - (a.x - p.x) * (c.y - p.y)) / det_;
  return Bary{{b1, b2, 1.0 - b1 - b2}};
}

Point Triangle::from_barycentric(const Bary& b) const {
  return {b[0] * v_[0].x + b[1] * v_[1].x + b[2] * v_[2].x,
          b[0] * v_[0].y + b[1] * v_[1].y + b[2] * v_[2].y};
}

bool Triangle::contains(Point p, double tol) const {
  Bary w = barycentric(p);
  return w[0] >= -tol && w[1] >= -tol && w[2] >= -tol;
}

int Triangle::vertex_region(Point p) const {
  Bary w = barycentric(p);
  if (w[0] < -kGeomTol || w[1] < -kGeomTol || w[2] < -kGeomTol)
    throw std::domain_error("point outside triangle");
  // The region of vertex j is exactly {argmax_j beta_j}: the segments from the
  // center of mass to the edge midpoints lie on the lines beta_j = beta_k.
  int best = 0;
  for (int j = 1; j < 3; ++j)
    if (w[j] > w[best] + kGeomTol) best = j;
  return best;
}

AffineMap AffineMap::inverse() const {
  double dd = det();
  if (std::abs(dd) < 1e-300) throw std::domain_error("singular affine map");
  AffineMap m;
  m.a = d / dd;
  m.b = -b / dd;
  m.c = -c / dd;
  m.d = a / dd;
  m.tx = -(m.a * tx + m.b * ty);
  m.ty = -(m.c * tx + m.d * ty);
  return m;
}

Triangle standard_triangle() {
  return Triangle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
}

AffineMap standardize(const Triangle& tri) {
  // Solve L*(v1-v0) = e1-e0, L*(v2-v0) = e2-e0 for the standard vertices e_j.
  const auto& v = tri.vertices();
  Triangle std_tri = standard_triangle();
  const auto& e = std_tri.vertices();
  double ux = v[1].x - v[0].x, uy = v[1].y - v[0].y;
  double wx = v[2].x - v[0].x, wy = v[2].y - v[0].y;
  double det = ux * wy - wx * uy;
  double px = e[1].x - e[0].x, py = e[1].y - e[0].y;
  double qx = e[2].x - e[0].x, qy = e[2].y - e[0].y;
  AffineMap m;
  m.a = (px * wy - qx * uy) / det;
  m.b = (qx * ux - px * wx) / det;
  m.c = (py * wy - qy * uy) / det;
  m.d = (qy * ux - py * wx) / det;
  m.tx = e[0].x - (m.a * v[0].x + m.b * v[0].y);
  m.ty = e[0].y - (m.c * v[0].x + m.d * v[0].y);
  return m;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw) : v_(std::move(ccw)) {
  if (v_.size() >= 3) {
    double s = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const Point& p = v_[i];
      const Point& q = v_[(i + 1) % v_.size()];
      s += p.x * q.y - q.x * p.y;
    }
    if (s < 0.0) std::reverse(v_.begin(), v_.end());
  }
}

double ConvexPolygon::area() const {
  if (v_.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point& p = v_[i];
    const Point& q = v_[(i + 1) % v_.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * std::abs(s);
}

bool ConvexPolygon::contains(Point p, double tol) const {
  if (v_.empty()) return false;
  if (v_.size() == 1)
    return std::abs(p.x - v_[0].x) <= tol && std::abs(p.y - v_[0].y) <= tol;
  if (v_.size() == 2) {
    // on-segment check
    double cross = (v_[1].x - v_[0].x) * (p.y - v_[0].y) - (p.x - v_[0].x) * (v_[1].y - v_[0].y);
    if (std::abs(cross) > tol) return false;
    double dot = (p.x - v_[0].x) * (v_[1].x - v_[0].x) + (p.y - v_[0].y) * (v_[1].y - v_[0].y);
    double len2 = (v_[1].x - v_[0].x) * (v_[1].x - v_[0].x) + (v_[1].y - v_[0].y) * (v_[1].y - v_[0].y);
    return dot >= -tol && dot <= len2 + tol;
  }
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % v_.size()];
    double cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (cross < -tol) return false;
  }
  return true;
}

void ConvexPolygon::clip(Point a, Point b, double tol) {
  if (v_.empty()) return;
  auto side = [&](const Point& p) {
    return (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
  };
  if (v_.size() == 1) {
    if (side(v_[0]) < -tol) v_.clear();
    return;
  }
  std::vector<Point> out;
  out.reserve(v_.size() + 1);
  std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = v_[i];
    const Point& q = v_[(i + 1) % n];
    double sp = side(p), sq = side(q);
    if (sp >= -tol) out.push_back(p);
    if ((sp > tol && sq < -tol) || (sp < -tol && sq > tol)) {
      double t = sp / (sp - sq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  v_ = std::move(out);
}

ConvexPolygon proximity_region(const Triangle& tri, Expansion e, Point x) {
  if (!tri.contains(x)) throw std::domain_error("point outside triangle");
  const auto& v = tri.vertices();
  // N({vertex}) = {vertex}
  for (int j = 0; j < 3; ++j) {
    if (std::abs(x.x - v[static_cast<std::size_t>(j)].x) <= kGeomTol &&
        std::abs(x.y - v[static_cast<std::size_t>(j)].y) <= kGeomTol)
      return ConvexPolygon({x});
  }
  if (e.infinite)
    return ConvexPolygon({v[0], v[1], v[2]});
  int j = tri.vertex_region(x);
  Bary w = tri.barycentric(x);
  double scale = e.r * (1.0 - w[j]);  // similar-triangle factor about vertex j
  Point aj = v[static_cast<std::size_t>(j)];
  Point bj = v[static_cast<std::size_t>((j + 1) % 3)];
  Point cj = v[static_cast<std::size_t>((j + 2) % 3)];
  ConvexPolygon poly({aj,
                      {aj.x + scale * (bj.x - aj.x), aj.y + scale * (bj.y - aj.y)},
                      {aj.x + scale * (cj.x - aj.x), aj.y + scale * (cj.y - aj.y)}});
  if (scale > 1.0) {
    // clip by the far edge (the two near edges already lie along tri's edges);
    // orient so the side containing the anchor vertex is kept
    Point far_a = bj, far_b = cj;
    double s = (far_b.x - far_a.x) * (aj.y - far_a.y) - (aj.x - far_a.x) * (far_b.y - far_a.y);
    if (s < 0) std::swap(far_a, far_b);
    poly.clip(far_a, far_b);
  }
  return poly;
}

bool in_proximity_region(const Triangle& tri, Expansion e, Point x, Point z) {
  Bary wx = tri.barycentric(x);
  if (wx[0] < -kGeomTol || wx[1] < -kGeomTol || wx[2] < -kGeomTol)
    throw std::domain_error("point outside triangle");
  Bary wz = tri.barycentric(z);
  // vertex source: N = {x}
  int jmax = 0;
  for (int j = 1; j < 3; ++j)
    if (wx[j] > wx[jmax] + kGeomTol) jmax = j;
  if (e.infinite) return tri.contains(z);
  double hx = 1.0 - wx[jmax];  // height coordinate, up to the common factor
  double hz = 1.0 - wz[jmax];
  return tri.contains(z) && hz <= e.r * hx + kGeomTol;
}

bool gamma1_contains(const Triangle& tri, Expansion e, Point x, Point z) {
  return in_proximity_region(tri, e, z, x);
}

}  // namespace rpcd
