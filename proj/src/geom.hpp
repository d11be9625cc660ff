#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace rpcd {

// Absolute tolerance for half-plane / containment predicates. Boundary events
// have probability zero under the continuous models; ties only need to be
// deterministic.
inline constexpr double kGeomTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Expansion factor r in [1, inf]; infinity is an explicit flag so that
/// degenerate-statistic branches never hinge on a sentinel float.
struct Expansion {
  double r = 1.0;
  bool infinite = false;

  static Expansion of(double r);  // throws std::domain_error if r < 1
  static Expansion inf() { return {0.0, true}; }
};

struct Bary {
  std::array<double, 3> b{};  // coordinates w.r.t. the triangle's vertices
  double operator[](int j) const { return b[static_cast<std::size_t>(j)]; }
};

/// Triangle with the derived quantities used by the proximity construction.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c);  // throws std::invalid_argument if collinear

  const std::array<Point, 3>& vertices() const { return v_; }
  Point vertex(int j) const { return v_[static_cast<std::size_t>(j)]; }
  double area() const { return area_; }
  Point center_of_mass() const { return cm_; }
  /// Midpoint of the edge opposite vertex j.
  Point edge_midpoint(int j) const { return mid_[static_cast<std::size_t>(j)]; }

  Bary barycentric(Point p) const;
  Point from_barycentric(const Bary& b) const;
  bool contains(Point p, double tol = kGeomTol) const;

  /// Index of the vertex region containing p (regions are bounded by segments
  /// from the center of mass to the edge midpoints). Ties are broken towards
  /// the lowest index. Throws std::domain_error if p lies outside.
  int vertex_region(Point p) const;

 private:
  std::array<Point, 3> v_;
  std::array<Point, 3> mid_;
  Point cm_;
  double area_ = 0.0;
  double det_ = 0.0;  // signed 2x area, cached for barycentric()
};

/// Affine map p -> L p + t with cached inverse.
struct AffineMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;  // L = [a b; c d]
  double tx = 0.0, ty = 0.0;

  Point operator()(Point p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  AffineMap inverse() const;  // throws std::domain_error if singular
  double det() const { return a * d - b * c; }
};

Triangle standard_triangle();  // T((0,0),(1,0),(1/2,sqrt3/2))

/// Affine map carrying tri onto the standard equilateral triangle (vertex j of
/// tri goes to vertex j of the standard triangle). Uniform measure maps to
/// uniform measure.
AffineMap standardize(const Triangle& tri);

/// Convex polygon as a CCW vertex list. Degenerate cases (point, segment) are
/// allowed; area() is then 0.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point> ccw_vertices);

  const std::vector<Point>& vertices() const { return v_; }
  bool empty() const { return v_.empty(); }
  double area() const;
  bool contains(Point p, double tol = kGeomTol) const;

  /// Keep the part on the left of (or on) the directed line a->b.
  void clip(Point a, Point b, double tol = kGeomTol);

 private:
  std::vector<Point> v_;
};

/// N_Y^r(x): the r-scaled similar triangle anchored at x's region vertex,
/// clipped to tri. For x a vertex of tri this is the degenerate polygon {x};
/// for r = inf it is tri itself. Throws std::domain_error if x is outside.
ConvexPolygon proximity_region(const Triangle& tri, Expansion e, Point x);

/// Arc predicate: z in N_Y^r(x). Same semantics as
/// proximity_region(tri,e,x).contains(z) but without building the polygon.
bool in_proximity_region(const Triangle& tri, Expansion e, Point x, Point z);

/// Gamma_1 membership: z such that x in N_Y^r(z).
bool gamma1_contains(const Triangle& tri, Expansion e, Point x, Point z);

}  // namespace rpcd
