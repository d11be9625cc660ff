#pragma once

#include <cstdint>
#include <vector>

#include "geom.hpp"
#include "rng.hpp"

namespace rpcd {

enum class AltKind { kNull, kSegregation, kAssociation };

/// Null or an eps-parameterized segregation/association alternative.
/// eps must lie in (0, sqrt(3)/3) for the non-null kinds.
struct Alternative {
  AltKind kind = AltKind::kNull;
  double eps = 0.0;

  static Alternative null() { return {}; }
  static Alternative segregation(double eps);
  static Alternative association(double eps);
};

/// Largest eps accepted; the association support degenerates to the vertices
/// as eps -> sqrt(3)/3.
double max_eps();

/// eps = sqrt(3*delta/4) for the delta-fraction corner carve of an arbitrary
/// triangle, delta in (0, 4/9).
double delta_to_epsilon(double delta);

std::vector<Point> sample_uniform_triangle(const Triangle& tri, std::size_t n, Rng& rng);

/// Uniform on the alternative's support inside tri. The carve geometry is
/// defined in the standardized triangle and mapped back, so an arbitrary tri
/// gets the affine image of the standard construction.
std::vector<Point> sample_alternative(const Triangle& tri, const Alternative& alt,
                                      std::size_t n, Rng& rng);

/// True if the standardized image of p satisfies the alternative's support
/// predicate (exact geometric check, used by tests).
bool in_alternative_support(const Triangle& tri, const Alternative& alt, Point p);

}  // namespace rpcd
