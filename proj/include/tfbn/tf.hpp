#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfbn/euler.hpp"
#include "tfbn/surface.hpp"

namespace tfbn {

/// A finite box of divisor-class coefficients, one closed range per NS
/// coordinate. A range with lo > hi makes the window empty.
struct Window {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  static Window box(std::size_t rank, std::int64_t lo, std::int64_t hi);

  bool empty() const;
  std::size_t rank() const { return ranges.size(); }
  bool contains(const DivisorClass& d) const;

  /// Every class in the window, lexicographic in the coefficients.
  std::vector<DivisorClass> classes() const;
};

enum class TFKind { Prioritary, Nonprioritary };

/// One irreducible component of TF_S(2, c1, c2).
///
/// Nonprioritary components parametrize general extensions
///   0 -> I_Z1(c1 - D) -> E -> I_Z2(D) -> 0,  len Z1 = n1, len Z2 = n2.
struct TFComponent {
  TFKind kind = TFKind::Prioritary;
  std::optional<DivisorClass> D;
  std::int64_t n1 = 0;
  std::optional<std::int64_t> n2;
  std::int64_t dimension = 0;
  std::optional<std::int64_t> embedding_codim;
  bool generic_locally_free = true;
  std::int64_t singular_locus_length = 0;

  friend bool operator==(const TFComponent&, const TFComponent&) = default;
};

/// Existence of a prioritary component of TF_S(r, c1, c2), any rank r >= 1.
/// Ruled models: r | c1.f implies 2 r c2 >= (r-1) c1^2; otherwise always.
/// P2: 2 r c2 - (r-1) c1^2 >= -d(r-d) with c1 = -d mod r, 0 <= d < r.
bool prioritary_exists(const SurfaceModel& s, const ChernData& chern);

/// Human-readable statement of the failed inequality, or nullopt when a
/// prioritary component exists.
std::optional<std::string> prioritary_failure_reason(const SurfaceModel& s, const ChernData& chern);

/// Rank-2 prioritary component (dimension -chi(E,E), generically smooth).
/// Throws InvalidInput for rank != 2.
std::optional<TFComponent> prioritary_component(const SurfaceModel& s, const ChernData& chern);

/// Whether (D, n1) indexes a nonprioritary component of TF_S(2, c1, c2):
///   2 D.f <= c1.f - 2,  n1 >= 0,  n2 = c2 + D(D-c1) - n1 >= 0,
///   n1 + n2 <= chi(O(2D - c1)).
bool nonprioritary_admissible(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2,
                              const DivisorClass& D, std::int64_t n1);

/// The component record for an admissible (D, n1); nullopt otherwise.
std::optional<TFComponent> nonprioritary_component(const SurfaceModel& s, const DivisorClass& c1,
                                                   std::int64_t c2, const DivisorClass& D,
                                                   std::int64_t n1);

/// All nonprioritary components with D in the window, sorted by (D, n1).
std::vector<TFComponent> enumerate_nonprioritary(const SurfaceModel& s, const DivisorClass& c1,
                                                 std::int64_t c2, const Window& window);

/// A polynomial of degree <= 2 in the NS coordinates of D, integer
/// coefficients keyed by exponent vectors.
struct ClassPolynomial {
  std::map<std::vector<int>, std::int64_t> terms;

  std::int64_t evaluate(const DivisorClass& d) const;
  std::string render(std::size_t rank) const;
};

/// Symbolic form of the nonprioritary admissibility conditions on D:
///   D.f <= fiber_bound_x2 / 2,  0 <= n <= points_total(D) <= chi_bound(D).
struct AdmissibleRegion {
  DivisorClass fiber;
  ClassPolynomial fiber_form;
  std::int64_t fiber_bound_x2 = 0;
  ClassPolynomial points_total;
  ClassPolynomial chi_bound;
  std::vector<std::string> inequalities;

  /// Some n makes (D, n) admissible.
  bool contains(const DivisorClass& d) const;
};

AdmissibleRegion admissible_region_description(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2);

}  // namespace tfbn
