#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "geom.hpp"

namespace rpcd {

/// Proximity catch digraph on n data points: arc (i,j) present iff point j
/// lies in the proximity region of point i. Dense bit-matrix storage for
/// n <= 4096, sorted pair list above that.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  std::size_t order() const { return n_; }
  std::uint64_t arc_count() const { return arcs_; }
  bool has_arc(std::size_t i, std::size_t j) const;

  /// h_ij = I{(i,j) arc} + I{(j,i) arc}; symmetric by construction.
  int pair_kernel(std::size_t i, std::size_t j) const;  // throws if i == j

  void add_arc(std::size_t i, std::size_t j);
  void finalize();  // sorts the pair-list representation

 private:
  std::size_t n_ = 0;
  std::uint64_t arcs_ = 0;
  std::vector<std::uint64_t> bits_;                       // n <= kDenseLimit
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;  // otherwise
  std::size_t words_ = 0;

  static constexpr std::size_t kDenseLimit = 4096;
};

struct DensityResult {
  double rho = 0.0;
  std::uint64_t arc_count = 0;
  std::size_t n = 0;
};

/// Builds the digraph for the points under N_Y^r in tri. All points must lie
/// in tri (the failing index is reported otherwise).
Digraph build_digraph(const Triangle& tri, Expansion e, const std::vector<Point>& points);

/// rho = |arcs| / (n (n-1)); requires n >= 2.
DensityResult relative_density(const Digraph& d);

/// Arc count alone, O(n^2) with no storage; the Monte Carlo engine's workhorse.
std::uint64_t count_arcs(const Triangle& tri, Expansion e, const std::vector<Point>& points);

}  // namespace rpcd
