#include "delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rpcd {

namespace {

struct Tri {
  int a, b, c;     // indices into the working point list, CCW
  bool alive = true;
};

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

// strictly-inside-circumcircle test with a relative tolerance; boundary points
// are treated as outside (the symbolic-perturbation rule)
bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& p) {
  double ax = a.x - p.x, ay = a.y - p.y;
  double bx = b.x - p.x, by = b.y - p.y;
  double cx = c.x - p.x, cy = c.y - p.y;
  double d = (ax * ax + ay * ay) * (bx * cy - cx * by) -
             (bx * bx + by * by) * (ax * cy - cx * ay) +
             (cx * cx + cy * cy) * (ax * by - bx * ay);
  double scale = (ax * ax + ay * ay) + (bx * bx + by * by) + (cx * cx + cy * cy);
  return d > 1e-12 * scale * scale;
}

}  // namespace

Triangle DelaunayMesh::triangle(std::size_t j) const {
  const auto& t = triangles[j];
  return Triangle(sites[static_cast<std::size_t>(t[0])], sites[static_cast<std::size_t>(t[1])],
                  sites[static_cast<std::size_t>(t[2])]);
}

int DelaunayMesh::locate(Point p, double tol) const {
  for (std::size_t j = 0; j < triangles.size(); ++j) {
    if (triangle(j).contains(p, tol)) return static_cast<int>(j);
  }
  return -1;
}

DelaunayMesh triangulate(std::vector<Point> sites) {
  const std::size_t n = sites.size();
  if (n < 3) throw std::invalid_argument("triangulation requires >= 3 sites");
  for (const auto& s : sites)
    if (!std::isfinite(s.x) || !std::isfinite(s.y))
      throw std::invalid_argument("non-finite site coordinate");

  // deterministic insertion order: lexicographic by (x, y), original index as
  // the final tie-break
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const auto &p = sites[static_cast<std::size_t>(i)], &q = sites[static_cast<std::size_t>(j)];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return i < j;
  });
  // drop duplicate sites
  std::vector<int> uniq;
  for (int idx : order) {
    if (!uniq.empty()) {
      const auto& p = sites[static_cast<std::size_t>(uniq.back())];
      const auto& q = sites[static_cast<std::size_t>(idx)];
      if (p.x == q.x && p.y == q.y) continue;
    }
    uniq.push_back(idx);
  }
  if (uniq.size() < 3) throw std::invalid_argument("fewer than 3 distinct sites");

  double minx = sites[0].x, maxx = sites[0].x, miny = sites[0].y, maxy = sites[0].y;
  for (const auto& s : sites) {
    minx = std::min(minx, s.x);
    maxx = std::max(maxx, s.x);
    miny = std::min(miny, s.y);
    maxy = std::max(maxy, s.y);
  }
  double span = std::max({maxx - minx, maxy - miny, 1.0});
  double cx = 0.5 * (minx + maxx), cy = 0.5 * (miny + maxy);

  // working points: sites plus a super-triangle
  std::vector<Point> pts = sites;
  const int s0 = static_cast<int>(pts.size());
  pts.push_back({cx - 40 * span, cy - 20 * span});
  pts.push_back({cx + 40 * span, cy - 20 * span});
  pts.push_back({cx, cy + 40 * span});

  std::vector<Tri> tris;
  tris.push_back({s0, s0 + 1, s0 + 2});

  for (int idx : uniq) {
    const Point& p = sites[static_cast<std::size_t>(idx)];
    // collect the cavity
    std::map<std::pair<int, int>, int> edge_use;
    std::vector<std::size_t> bad;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      const Point& a = pts[static_cast<std::size_t>(tris[t].a)];
      const Point& b = pts[static_cast<std::size_t>(tris[t].b)];
      const Point& c = pts[static_cast<std::size_t>(tris[t].c)];
      if (in_circumcircle(a, b, c, p)) bad.push_back(t);
    }
    if (bad.empty()) {
      // p lies on/outside every circumcircle boundary (degenerate input such
      // as exact duplicates was filtered; collinear-only input ends up here)
      continue;
    }
    auto add_edge = [&](int u, int v) { edge_use[{std::min(u, v), std::max(u, v)}]++; };
    for (std::size_t t : bad) {
      add_edge(tris[t].a, tris[t].b);
      add_edge(tris[t].b, tris[t].c);
      add_edge(tris[t].c, tris[t].a);
      tris[t].alive = false;
    }
    for (std::size_t t : bad) {
      auto once = [&](int u, int v) {
        if (edge_use[{std::min(u, v), std::max(u, v)}] != 1) return;
        Tri nt{u, v, idx};
        const Point& a = pts[static_cast<std::size_t>(nt.a)];
        const Point& b = pts[static_cast<std::size_t>(nt.b)];
        const Point& c = pts[static_cast<std::size_t>(nt.c)];
        if (orient(a, b, c) < 0) std::swap(nt.b, nt.c);
        tris.push_back(nt);
      };
      once(tris[t].a, tris[t].b);
      once(tris[t].b, tris[t].c);
      once(tris[t].c, tris[t].a);
    }
  }

  DelaunayMesh mesh;
  mesh.sites = sites;
  for (const auto& t : tris) {
    if (!t.alive) continue;
    if (t.a >= s0 || t.b >= s0 || t.c >= s0) continue;  // touches the super-triangle
    std::array<int, 3> tri{t.a, t.b, t.c};
    std::sort(tri.begin(), tri.end());
    mesh.triangles.push_back(tri);
  }
  if (mesh.triangles.empty()) throw std::invalid_argument("collinear sites");
  std::sort(mesh.triangles.begin(), mesh.triangles.end());
  mesh.triangles.erase(std::unique(mesh.triangles.begin(), mesh.triangles.end()),
                       mesh.triangles.end());

  mesh.weights.resize(mesh.triangles.size());
  double total = 0.0;
  for (std::size_t j = 0; j < mesh.triangles.size(); ++j) {
    double a = mesh.triangle(j).area();
    mesh.weights[j] = a;
    total += a;
  }
  mesh.hull_area = total;
  for (auto& w : mesh.weights) w /= total;
  return mesh;
}

}  // namespace rpcd
