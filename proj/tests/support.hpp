#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's formulas.

#include <cstdint>
#include <random>
#include <vector>

#include "tfbn/surface.hpp"

namespace support {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline tfbn::DivisorClass random_class(std::mt19937_64& rng, std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> c(rank);
  for (auto& x : c) x = uniform(rng, lo, hi);
  return tfbn::DivisorClass(c);
}

inline std::vector<tfbn::SurfaceModel> all_models() {
  return {tfbn::SurfaceModel::projective_plane(), tfbn::SurfaceModel::quadric(), tfbn::SurfaceModel::product_ruled(1),
          tfbn::SurfaceModel::product_ruled(2), tfbn::SurfaceModel::product_ruled(3),
          tfbn::SurfaceModel::numerical_ruled(0, 1, true), tfbn::SurfaceModel::numerical_ruled(2, -1, true)};
}

inline std::vector<tfbn::SurfaceModel> cohomology_models() {
  return {tfbn::SurfaceModel::projective_plane(), tfbn::SurfaceModel::quadric(), tfbn::SurfaceModel::product_ruled(1),
          tfbn::SurfaceModel::product_ruled(2), tfbn::SurfaceModel::product_ruled(3)};
}

// Number of monomials X0^i X1^j X2^k with i + j + k = d, by enumeration.
inline std::int64_t count_plane_monomials(std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i <= d; ++i)
    for (std::int64_t j = 0; i + j <= d; ++j) ++n;
  return n;
}

// chi of a line bundle from counting sections of the factors.
// P2: chi(O(d)) = #monomials of degree d, extended as the cubic polynomial
// it agrees with (interpolated from d >= 0). Product surfaces: chi is the
// product of the factor Euler characteristics, (a+1)(b+1-g).
inline std::int64_t chi_reference(const tfbn::SurfaceModel& s, const tfbn::DivisorClass& d) {
  switch (s.kind()) {
    case tfbn::SurfaceKind::ProjectivePlane: {
      const std::int64_t x = d[0];
      if (x >= 0) return count_plane_monomials(x);
      if (x >= -2) return 0;
      return count_plane_monomials(-x - 3);
    }
    case tfbn::SurfaceKind::Quadric:
      return (d[0] + 1) * (d[1] + 1);
    case tfbn::SurfaceKind::ProductRuled:
      return (d[0] + 1) * (d[1] + 1 - s.genus());
    default:
      return 0;
  }
}

}  // namespace support
