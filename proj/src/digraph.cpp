#include "digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rpcd {

Digraph::Digraph(std::size_t n) : n_(n) {
  if (n_ <= kDenseLimit) {
    words_ = (n_ * n_ + 63) / 64;
    bits_.assign(words_, 0);
  }
}

bool Digraph::has_arc(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || i == j) return false;
  if (!bits_.empty() || n_ <= kDenseLimit) {
    std::size_t idx = i * n_ + j;
    if (idx / 64 >= bits_.size()) return false;
    return (bits_[idx / 64] >> (idx % 64)) & 1u;
  }
  return std::binary_search(pairs_.begin(), pairs_.end(),
                            std::make_pair(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
}

int Digraph::pair_kernel(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("pair kernel requires i != j");
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
  return (has_arc(i, j) ? 1 : 0) + (has_arc(j, i) ? 1 : 0);
}

void Digraph::add_arc(std::size_t i, std::size_t j) {
  if (i == j) return;
  if (n_ <= kDenseLimit) {
    std::size_t idx = i * n_ + j;
    std::uint64_t mask = 1ull << (idx % 64);
    if (!(bits_[idx / 64] & mask)) {
      bits_[idx / 64] |= mask;
      ++arcs_;
    }
  } else {
    pairs_.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    ++arcs_;
  }
}

void Digraph::finalize() {
  if (!pairs_.empty()) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    arcs_ = pairs_.size();
  }
}

namespace {
struct SourceData {
  int region;
  double threshold;  // r * (1 - beta_region)
};
}  // namespace

Digraph build_digraph(const Triangle& tri, Expansion e, const std::vector<Point>& points) {
  const std::size_t n = points.size();
  Digraph d(n);
  std::vector<Bary> bw(n);
  for (std::size_t i = 0; i < n; ++i) {
    bw[i] = tri.barycentric(points[i]);
    if (bw[i][0] < -kGeomTol || bw[i][1] < -kGeomTol || bw[i][2] < -kGeomTol)
      throw std::domain_error("point " + std::to_string(i) + " outside triangle");
  }
  if (e.infinite) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) d.add_arc(i, j);
    d.finalize();
    return d;
  }
  std::vector<SourceData> src(n);
  for (std::size_t i = 0; i < n; ++i) {
    int jm = 0;
    for (int j = 1; j < 3; ++j)
      if (bw[i][j] > bw[i][jm] + kGeomTol) jm = j;
    src[i] = {jm, e.r * (1.0 - bw[i][jm])};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = src[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (1.0 - bw[j][s.region] <= s.threshold + kGeomTol) d.add_arc(i, j);
    }
  }
  d.finalize();
  return d;
}

DensityResult relative_density(const Digraph& d) {
  if (d.order() < 2) throw std::invalid_argument("density undefined for n < 2");
  const double denom = static_cast<double>(d.order()) * static_cast<double>(d.order() - 1);
  return {static_cast<double>(d.arc_count()) / denom, d.arc_count(), d.order()};
}

std::uint64_t count_arcs(const Triangle& tri, Expansion e, const std::vector<Point>& points) {
  const std::size_t n = points.size();
  if (e.infinite) return static_cast<std::uint64_t>(n) * (n - 1);
  std::vector<Bary> bw(n);
  for (std::size_t i = 0; i < n; ++i) bw[i] = tri.barycentric(points[i]);
  std::uint64_t arcs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int jm = 0;
    if (bw[i][1] > bw[i][jm] + kGeomTol) jm = 1;
    if (bw[i][2] > bw[i][jm] + kGeomTol) jm = 2;
    const double thr = e.r * (1.0 - bw[i][jm]) + kGeomTol;
    for (std::size_t j = 0; j < n; ++j)
      arcs += (j != i) && (1.0 - bw[j][jm] <= thr);
  }
  return arcs;
}

}  // namespace rpcd
