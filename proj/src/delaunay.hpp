#pragma once

#include <array>
#include <vector>

#include "geom.hpp"

namespace rpcd {

/// Delaunay triangulation of the reference sites with hull-relative weights.
/// Triangles are stored as sorted index triples in lexicographic order, so a
/// given site set always produces the identical mesh.
struct DelaunayMesh {
  std::vector<Point> sites;
  std::vector<std::array<int, 3>> triangles;
  std::vector<double> weights;  // w_j = A(T_j) / A(hull), sum = 1
  double hull_area = 0.0;

  std::size_t size() const { return triangles.size(); }
  Triangle triangle(std::size_t j) const;

  /// Index of the triangle containing p; points on shared edges go to the
  /// lowest-index triangle. Returns -1 if p is outside the hull.
  int locate(Point p, double tol = kGeomTol) const;
};

/// Incremental Bowyer-Watson. Requires >= 3 non-collinear sites. Cocircular
/// site groups are resolved deterministically: a point numerically on a
/// circumcircle does not invalidate the triangle, so the diagonal follows the
/// (sorted) insertion order.
DelaunayMesh triangulate(std::vector<Point> sites);

}  // namespace rpcd
