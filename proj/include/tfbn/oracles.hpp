#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tfbn/bn.hpp"
#include "tfbn/exact.hpp"
#include "tfbn/surface.hpp"
#include "tfbn/tf.hpp"

namespace tfbn {

/// Affine chart point: (x, y) on P2 for [1:x:y], (s, t) on the quadric for
/// ([1:s], [1:t]).
struct AffinePoint {
  exact::Rational x;
  exact::Rational y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Exponent vectors of the monomial basis of H0(O(D)), D >= 0.
/// P2: (i, j, k) for X0^i X1^j X2^k. Quadric: (i, j) for S1^i S0^(d1-i) T1^j T0^(d2-j).
std::vector<std::vector<int>> monomial_basis(const SurfaceModel& s, const DivisorClass& d);

/// Values of the monomial basis at an affine chart point.
std::vector<exact::Rational> evaluate_basis(const SurfaceModel& s, const DivisorClass& d, const AffinePoint& p);

/// A map P1 -> S given by homogeneous coordinate polynomials in an affine
/// parameter t. P2: (X0, X1, X2). Quadric: (S0, S1, T0, T1).
struct CurveParametrization {
  std::vector<exact::Poly> coords;

  /// Pullback of a monomial_basis(s, d) element.
  exact::Poly pullback(const SurfaceModel& s, const DivisorClass& d, const std::vector<int>& exponents) const;

  /// The image point in the affine chart; ChartViolation when t maps outside it.
  AffinePoint point_at(const SurfaceModel& s, const exact::Rational& t) const;
};

/// Points on the curve given as the roots of a squarefree polynomial in the
/// parameter. This carries Galois orbits of non-rational points exactly.
struct ParameterCluster {
  exact::Poly roots;
};

struct PointConfiguration {
  /// Rational points; the first n_free are the free points.
  std::vector<AffinePoint> points;
  std::int64_t n_free = 0;
  /// Parameter values of points[n_free..], when they were sampled on `curve`.
  std::vector<exact::Rational> on_curve_parameters;
  std::vector<ParameterCluster> clusters;
  std::optional<DivisorClass> curve_class;
  /// Implicit equation of the curve on monomial_basis(curve_class).
  std::vector<exact::Rational> curve_coefficients;
  std::optional<CurveParametrization> curve;
  std::int64_t expected_h1 = 0;

  std::int64_t n_on_curve() const;
  std::int64_t length() const;
};

struct HilbertReport {
  std::int64_t length = 0;
  std::int64_t h0_E = 0;
  std::int64_t rank = 0;
  std::int64_t h0_ideal = 0;
  std::int64_t h1_ideal = 0;
  std::int64_t expected_h1 = 0;
};

/// h0 and h1 of I_X(E) by exact rank of the evaluation conditions of
/// H0(O(E)) on X. Needs S in {P2, Quadric} and E effective.
HilbertReport hilbert_function(const SurfaceModel& s, const DivisorClass& E, const PointConfiguration& config);

/// Deterministic sample of a general member of a curve-type component.
/// When gamma equals the arithmetic genus of the curve, the N - n points are
/// arbitrary rational points of a rational curve of class D. Otherwise they
/// are gamma rational points plus the intersection with a random curve of
/// class E - K - D, carried as a parameter cluster.
PointConfiguration sample_component_configuration(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                                  const BNComponent& comp, std::uint64_t seed);

/// N random integer points with pairwise distinct coordinates (and no three
/// collinear on P2); expected_h1 = max(0, N - h0(O(E))).
PointConfiguration general_configuration(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                         std::uint64_t seed);

struct CrossRulingReport {
  /// Components with the fiber of pr1 as f.
  std::vector<TFComponent> first;
  /// Components with the fiber of pr2 as f, D given in the original bidegree.
  std::vector<TFComponent> second;
  /// (index in first, index in second) pairs matched on (D, dimension, embedding_codim).
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<std::size_t> unmatched_first;
  std::vector<std::size_t> unmatched_second;
};

/// Nonprioritary components of TF_Quadric(2, c1, c2) computed once per
/// ruling. Gathers evidence only; no relationship is asserted.
CrossRulingReport cross_ruling_diagnostic(const DivisorClass& c1, std::int64_t c2, const Window& window);

}  // namespace tfbn
