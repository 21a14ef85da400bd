#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfbn/surface.hpp"
#include "tfbn/tf.hpp"

namespace tfbn {

enum class BNKind { CurveType, PrioritaryType };

/// One irreducible component of W^0_N(E) in Hilb^N(S).
///
/// CurveType: n general points plus N - n points on a curve of class D; the
/// points on the curve differ from E|_C - K_C by an effective divisor Gamma
/// of degree gamma_degree.
struct BNComponent {
  BNKind kind = BNKind::CurveType;
  std::optional<DivisorClass> D;
  std::int64_t n = 0;
  std::int64_t gamma_degree = 0;
  std::int64_t codim = 0;
  std::int64_t dim = 0;
  std::string description;

  friend bool operator==(const BNComponent&, const BNComponent&) = default;
};

/// The doubled/quadrupled prioritary threshold that N must reach, as
/// "factor * N >= value". The quadric special case (e1, 1, e1 + 2) is
/// reported separately.
struct PrioritaryThreshold {
  std::int64_t factor = 0;
  std::int64_t value = 0;
  bool special_case = false;
  bool holds = false;
};

PrioritaryThreshold bn_prioritary_threshold(const SurfaceModel& s, const DivisorClass& E, std::int64_t N);

/// Validates the inputs of bn_components: S is P2 or Quadric (UnsupportedSurface),
/// E has nonnegative (bi)degree (ENotEffective), 0 < N <= chi(O(E)) (NOutOfRange).
void check_bn_input(const SurfaceModel& s, const DivisorClass& E, std::int64_t N);

/// All components, CurveType sorted by (D, n) first, PrioritaryType last.
std::vector<BNComponent> bn_components(const SurfaceModel& s, const DivisorClass& E, std::int64_t N);

/// The component of TF_S(2, E - K, N) matching a CurveType component
/// (quotient class D, n1 = n). Throws AdmissibilityViolation when that pair is
/// not admissible, InvalidInput for PrioritaryType.
TFComponent serre_correspondence(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                 const BNComponent& comp);

struct CodimCheck {
  std::int64_t closed_form = 0;
  std::int64_t stack_path = 0;
};

/// closed_form: the component's codimension; stack_path: 2N minus
/// (dim of the TF component + chi of the rank-2 sheaf).
CodimCheck codim_two_path_check(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                const BNComponent& comp);

}  // namespace tfbn
