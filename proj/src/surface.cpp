#include "tfbn/surface.hpp"

#include <charconv>
#include <optional>

#include "tfbn/checked.hpp"
#include "tfbn/error.hpp"

namespace tfbn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedSurface: return "UnsupportedSurface";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NOutOfRange: return "NOutOfRange";
    case ErrorKind::ENotEffective: return "ENotEffective";
    case ErrorKind::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ChartViolation: return "ChartViolation";
    case ErrorKind::SamplingFailure: return "SamplingFailure";
  }
  return "Unknown";
}

namespace {

DivisorClass zip(const DivisorClass& a, const DivisorClass& b, bool subtract) {
  if (a.rank() != b.rank()) fail(ErrorKind::DimensionMismatch, "divisor classes of different rank");
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.rank(); ++i)
    r.coeffs[i] = subtract ? checked::sub(a[i], b[i]) : checked::add(a[i], b[i]);
  return r;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::InvalidInput, "bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return zip(a, b, false); }
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return zip(a, b, true); }

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& c : r.coeffs) c = checked::neg(c);
  return r;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& c : r.coeffs) c = checked::mul(k, c);
  return r;
}

std::string to_string(const DivisorClass& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

SurfaceModel SurfaceModel::projective_plane() { return {SurfaceKind::ProjectivePlane, 0, 0}; }

SurfaceModel SurfaceModel::quadric() { return {SurfaceKind::Quadric, 0, 0}; }

SurfaceModel SurfaceModel::product_ruled(int genus) {
  if (genus < 1) fail(ErrorKind::InvalidInput, "product ruled surface needs genus >= 1 (use quadric for genus 0)");
  return {SurfaceKind::ProductRuled, genus, 0};
}

SurfaceModel SurfaceModel::numerical_ruled(int genus, std::int64_t invariant_e, bool asserted) {
  if (genus < 0) fail(ErrorKind::InvalidInput, "ruled surface needs genus >= 0");
  if (!asserted)
    fail(ErrorKind::InvalidInput,
         "numerical ruled surfaces require assert-no-negative-curves; the absence of negative curves cannot be "
         "checked from numerical data");
  return {SurfaceKind::NumericalRuled, genus, invariant_e};
}

std::string SurfaceModel::name() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return "p2";
    case SurfaceKind::Quadric: return "quadric";
    case SurfaceKind::ProductRuled: return "product:g=" + std::to_string(genus_);
    case SurfaceKind::NumericalRuled:
      return "ruled:g=" + std::to_string(genus_) + ",e=" + std::to_string(e_) + ",assert-no-negative-curves";
  }
  return "";
}

SurfaceModel parse_surface(std::string_view text) {
  if (text == "p2") return SurfaceModel::projective_plane();
  if (text == "quadric") return SurfaceModel::quadric();

  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorKind::InvalidInput, "unknown surface '" + std::string(text) + "'");
  std::string_view head = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  std::optional<std::int64_t> g, e;
  bool asserted = false;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.starts_with("g=")) {
      g = parse_int(item.substr(2), "genus");
    } else if (item.starts_with("e=")) {
      e = parse_int(item.substr(2), "invariant e");
    } else if (item == "assert-no-negative-curves") {
      asserted = true;
    } else {
      fail(ErrorKind::InvalidInput, "unknown surface parameter '" + std::string(item) + "'");
    }
  }
  if (!g) fail(ErrorKind::InvalidInput, "surface '" + std::string(text) + "' needs g=");
  if (*g > 1000000) fail(ErrorKind::InvalidInput, "genus too large");

  if (head == "product") {
    if (e || asserted) fail(ErrorKind::InvalidInput, "product surfaces take only g=");
    return SurfaceModel::product_ruled(static_cast<int>(*g));
  }
  if (head == "ruled") {
    if (!e) fail(ErrorKind::InvalidInput, "ruled surfaces need e=");
    return SurfaceModel::numerical_ruled(static_cast<int>(*g), *e, asserted);
  }
  fail(ErrorKind::InvalidInput, "unknown surface '" + std::string(text) + "'");
}

void check_class(const SurfaceModel& s, const DivisorClass& d) {
  if (d.rank() != s.ns_rank())
    fail(ErrorKind::DimensionMismatch, "class " + to_string(d) + " does not match NS rank " +
                                           std::to_string(s.ns_rank()) + " of " + s.name());
}

std::int64_t intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
  check_class(s, a);
  check_class(s, b);
  if (s.ns_rank() == 1) return checked::mul(a[0], b[0]);
  // a*b' + a'*b, plus the h^2 = -e term on numerically ruled models.
  std::int64_t r = checked::add(checked::mul(a[0], b[1]), checked::mul(a[1], b[0]));
  if (s.kind() == SurfaceKind::NumericalRuled && s.invariant_e() != 0)
    r = checked::sub(r, checked::mul(s.invariant_e(), checked::mul(a[0], b[0])));
  return r;
}

DivisorClass canonical_class(const SurfaceModel& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return {-3};
    case SurfaceKind::Quadric: return {-2, -2};
    case SurfaceKind::ProductRuled: return {-2, 2 * static_cast<std::int64_t>(s.genus()) - 2};
    case SurfaceKind::NumericalRuled:
      return {-2, checked::sub(2 * static_cast<std::int64_t>(s.genus()) - 2, s.invariant_e())};
  }
  return {};
}

DivisorClass fiber_class(const SurfaceModel& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return {1};
    case SurfaceKind::Quadric: return {1, 0};
    case SurfaceKind::ProductRuled:
    case SurfaceKind::NumericalRuled: return {0, 1};
  }
  return {};
}

bool is_effective_irreducible(const SurfaceModel& s, const DivisorClass& d) {
  check_class(s, d);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return d[0] >= 1;
    case SurfaceKind::Quadric:
      return (d[0] >= 1 && d[1] >= 1) || (d[0] == 1 && d[1] == 0) || (d[0] == 0 && d[1] == 1);
    default: fail(ErrorKind::UnsupportedSurface, "irreducibility is only decided on p2 and quadric");
  }
}

}  // namespace tfbn
