#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tfbn {

enum class SurfaceKind { ProjectivePlane, Quadric, ProductRuled, NumericalRuled };

/// A class in the Neron-Severi lattice, in the surface's basis.
///
/// P2: a length-1 vector (the degree).
/// Quadric: the bidegree (d1, d2), with pairing d1*d2' + d1'*d2. The fiber of
/// the first projection has bidegree (1,0), so D.f = d2.
/// Ruled models: coefficients (a, b) of a*h + b*f, where f is the fiber and h a
/// section; D.f = a.
struct DivisorClass {
  std::vector<std::int64_t> coeffs;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  DivisorClass(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  std::size_t rank() const { return coeffs.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs[i]; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(std::int64_t k, const DivisorClass& a);

std::string to_string(const DivisorClass& d);

class SurfaceModel {
 public:
  static SurfaceModel projective_plane();
  static SurfaceModel quadric();
  /// P1 x C with C of genus g >= 1.
  static SurfaceModel product_ruled(int genus);
  /// A ruled surface over a genus-g curve known only numerically. The caller
  /// must assert that it carries no curve of negative self-intersection.
  static SurfaceModel numerical_ruled(int genus, std::int64_t invariant_e,
                                      bool no_negative_curves_asserted);

  SurfaceKind kind() const { return kind_; }
  int genus() const { return genus_; }
  std::int64_t invariant_e() const { return e_; }
  std::int64_t chi_O() const { return 1 - genus_; }
  std::size_t ns_rank() const { return kind_ == SurfaceKind::ProjectivePlane ? 1 : 2; }
  bool is_ruled_model() const { return kind_ != SurfaceKind::ProjectivePlane; }

  /// Canonical descriptor: "p2", "quadric", "product:g=2",
  /// "ruled:g=1,e=0,assert-no-negative-curves".
  std::string name() const;

  DivisorClass zero() const { return DivisorClass(std::vector<std::int64_t>(ns_rank(), 0)); }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  SurfaceModel(SurfaceKind kind, int genus, std::int64_t e) : kind_(kind), genus_(genus), e_(e) {}

  SurfaceKind kind_;
  int genus_;
  std::int64_t e_;
};

/// Parses a surface descriptor; throws Error(InvalidInput) on malformed input.
SurfaceModel parse_surface(std::string_view text);

/// Symmetric bilinear intersection pairing.
std::int64_t intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

DivisorClass canonical_class(const SurfaceModel& s);

/// The fiber class; on P2 the class of a line.
DivisorClass fiber_class(const SurfaceModel& s);

/// Effective classes containing an irreducible curve. P2 and Quadric only.
bool is_effective_irreducible(const SurfaceModel& s, const DivisorClass& d);

/// Throws DimensionMismatch unless d has ns_rank coefficients.
void check_class(const SurfaceModel& s, const DivisorClass& d);

}  // namespace tfbn
