#pragma once

#include <cstdint>

#include "tfbn/surface.hpp"

namespace tfbn {

struct CohomologyTriple {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  std::int64_t euler() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
};

/// Cohomology of the generic line bundle in the numerical class D.
///
/// P2 uses the standard closed form. Quadric and ProductRuled(g) use Kunneth,
/// where the genus-g factor is a generic bundle of the given degree, so
/// h0 = max(b-g+1, 0) even for 0 <= b <= g. NumericalRuled is rejected with
/// UnsupportedSurface.
CohomologyTriple line_cohomology(const SurfaceModel& s, const DivisorClass& d);

std::int64_t h1_of(const SurfaceModel& s, const DivisorClass& d);

/// True when line_cohomology is available on s.
bool cohomology_supported(const SurfaceModel& s);

}  // namespace tfbn
