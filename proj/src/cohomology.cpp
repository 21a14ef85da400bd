#include "tfbn/cohomology.hpp"

#include <algorithm>

#include "tfbn/checked.hpp"
#include "tfbn/error.hpp"

namespace tfbn {

namespace {

struct CurveBlock {
  std::int64_t h0;
  std::int64_t h1;
};

// Generic line bundle of degree `deg` on a smooth curve of genus g.
CurveBlock curve_block(std::int64_t deg, std::int64_t genus) {
  return {std::max<std::int64_t>(checked::add(checked::sub(deg, genus), 1), 0),
          std::max<std::int64_t>(checked::sub(checked::sub(genus, 1), deg), 0)};
}

std::int64_t binom2(std::int64_t n) {
  // C(n+2, 2) for n >= 0
  return checked::half_exact(checked::mul(checked::add(n, 1), checked::add(n, 2)));
}

CohomologyTriple kunneth(CurveBlock a, CurveBlock b) {
  using checked::add;
  using checked::mul;
  return {mul(a.h0, b.h0), add(mul(a.h1, b.h0), mul(a.h0, b.h1)), mul(a.h1, b.h1)};
}

}  // namespace

bool cohomology_supported(const SurfaceModel& s) { return s.kind() != SurfaceKind::NumericalRuled; }

CohomologyTriple line_cohomology(const SurfaceModel& s, const DivisorClass& d) {
  check_class(s, d);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: {
      const std::int64_t deg = d[0];
      CohomologyTriple t;
      if (deg >= 0) t.h0 = binom2(deg);
      const std::int64_t dual = checked::sub(-3, deg);
      if (dual >= 0) t.h2 = binom2(dual);
      return t;
    }
    case SurfaceKind::Quadric:
      return kunneth(curve_block(d[0], 0), curve_block(d[1], 0));
    case SurfaceKind::ProductRuled:
      // a*h + b*f restricts with degree a to the P1 fibers and degree b to the base curve.
      return kunneth(curve_block(d[0], 0), curve_block(d[1], s.genus()));
    case SurfaceKind::NumericalRuled:
      break;
  }
  fail(ErrorKind::UnsupportedSurface,
       "line bundle cohomology is unavailable on numerical ruled surfaces (only chi is known)");
}

std::int64_t h1_of(const SurfaceModel& s, const DivisorClass& d) { return line_cohomology(s, d).h1; }

}  // namespace tfbn
