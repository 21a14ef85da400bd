#include "tfbn/tf.hpp"

#include <algorithm>

#include "tfbn/checked.hpp"
#include "tfbn/cohomology.hpp"
#include "tfbn/error.hpp"

namespace tfbn {

using checked::add;
using checked::mul;
using checked::sub;

Window Window::box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return Window{std::vector<std::pair<std::int64_t, std::int64_t>>(rank, {lo, hi})};
}

bool Window::empty() const {
  if (ranges.empty()) return true;
  return std::any_of(ranges.begin(), ranges.end(), [](const auto& r) { return r.first > r.second; });
}

bool Window::contains(const DivisorClass& d) const {
  if (d.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (d[i] < ranges[i].first || d[i] > ranges[i].second) return false;
  return true;
}

std::vector<DivisorClass> Window::classes() const {
  std::vector<DivisorClass> out;
  if (empty()) return out;
  std::vector<std::int64_t> cur(rank());
  for (std::size_t i = 0; i < rank(); ++i) cur[i] = ranges[i].first;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (cur[i] < ranges[i].second) {
        ++cur[i];
        break;
      }
      cur[i] = ranges[i].first;
      if (i == 0) return out;
    }
  }
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) { return (a - floor_mod(a, m)) / m; }

struct PrioritaryTest {
  bool exists;
  std::string reason;
};

PrioritaryTest prioritary_test(const SurfaceModel& s, const ChernData& chern) {
  if (chern.rank < 1) fail(ErrorKind::InvalidInput, "rank must be >= 1");
  check_class(s, chern.c1);
  const std::int64_t r = chern.rank;
  const std::int64_t c1sq = intersect(s, chern.c1, chern.c1);
  const std::int64_t lhs = sub(mul(mul(2, r), chern.c2), mul(r - 1, c1sq));

  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const std::int64_t d = floor_mod(-chern.c1[0], r);
    const std::int64_t rhs = -mul(d, r - d);
    if (lhs >= rhs) return {true, {}};
    return {false, "2r*c2 - (r-1)*c1^2 >= -d(r-d) fails: " + std::to_string(lhs) + " < " + std::to_string(rhs) +
                       " (r=" + std::to_string(r) + ", d=" + std::to_string(d) + ")"};
  }

  const std::int64_t c1f = intersect(s, chern.c1, fiber_class(s));
  if (floor_mod(c1f, r) != 0) return {true, {}};
  if (lhs >= 0) return {true, {}};
  return {false, "r divides c1.f and 2r*c2 >= (r-1)*c1^2 fails: " + std::to_string(mul(mul(2, r), chern.c2)) +
                     " < " + std::to_string(mul(r - 1, c1sq)) + " (r=" + std::to_string(r) +
                     ", c1.f=" + std::to_string(c1f) + ")"};
}

std::int64_t prioritary_dimension(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2) {
  const SheafClass e(2, c1, c2);
  return -chi_pair(s, e, e);
}

}  // namespace

bool prioritary_exists(const SurfaceModel& s, const ChernData& chern) { return prioritary_test(s, chern).exists; }

std::optional<std::string> prioritary_failure_reason(const SurfaceModel& s, const ChernData& chern) {
  auto t = prioritary_test(s, chern);
  if (t.exists) return std::nullopt;
  return t.reason;
}

std::optional<TFComponent> prioritary_component(const SurfaceModel& s, const ChernData& chern) {
  if (chern.rank != 2) fail(ErrorKind::InvalidInput, "component records are built for rank 2 only");
  if (!prioritary_exists(s, chern)) return std::nullopt;
  TFComponent c;
  c.kind = TFKind::Prioritary;
  c.dimension = prioritary_dimension(s, chern.c1, chern.c2);
  c.embedding_codim = 0;
  c.generic_locally_free = true;
  c.singular_locus_length = 0;
  return c;
}

bool nonprioritary_admissible(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2,
                              const DivisorClass& D, std::int64_t n1) {
  const DivisorClass f = fiber_class(s);
  if (mul(2, intersect(s, D, f)) > sub(intersect(s, c1, f), 2)) return false;
  if (n1 < 0) return false;
  const std::int64_t total = add(c2, intersect(s, D, D - c1));
  if (sub(total, n1) < 0) return false;
  return total <= chi_line_bundle(s, 2 * D - c1);
}

std::optional<TFComponent> nonprioritary_component(const SurfaceModel& s, const DivisorClass& c1,
                                                   std::int64_t c2, const DivisorClass& D,
                                                   std::int64_t n1) {
  if (!nonprioritary_admissible(s, c1, c2, D, n1)) return std::nullopt;
  const DivisorClass twist = 2 * D - c1;
  const std::int64_t total = add(c2, intersect(s, D, D - c1));
  TFComponent c;
  c.kind = TFKind::Nonprioritary;
  c.D = D;
  c.n1 = n1;
  c.n2 = total - n1;
  c.dimension = sub(add(prioritary_dimension(s, c1, c2), chi_line_bundle(s, twist)), total);
  if (cohomology_supported(s)) c.embedding_codim = add(*c.n2, h1_of(s, twist));
  c.generic_locally_free = n1 == 0;
  c.singular_locus_length = n1;
  return c;
}

std::vector<TFComponent> enumerate_nonprioritary(const SurfaceModel& s, const DivisorClass& c1,
                                                 std::int64_t c2, const Window& window) {
  check_class(s, c1);
  std::vector<TFComponent> out;
  if (window.empty()) return out;
  if (window.rank() != s.ns_rank()) fail(ErrorKind::DimensionMismatch, "window rank does not match the surface");

  const DivisorClass f = fiber_class(s);
  const std::int64_t bound_x2 = sub(intersect(s, c1, f), 2);
  const std::int64_t base_dim = prioritary_dimension(s, c1, c2);
  const bool with_h1 = cohomology_supported(s);

  for (const DivisorClass& D : window.classes()) {
    if (mul(2, intersect(s, D, f)) > bound_x2) continue;
    const std::int64_t total = add(c2, intersect(s, D, D - c1));
    if (total < 0) continue;
    const DivisorClass twist = 2 * D - c1;
    const std::int64_t chi = chi_line_bundle(s, twist);
    if (total > chi) continue;
    const std::int64_t dim = sub(add(base_dim, chi), total);
    const std::optional<std::int64_t> h1 = with_h1 ? std::optional(h1_of(s, twist)) : std::nullopt;
    for (std::int64_t n1 = 0; n1 <= total; ++n1) {
      TFComponent c;
      c.kind = TFKind::Nonprioritary;
      c.D = D;
      c.n1 = n1;
      c.n2 = total - n1;
      c.dimension = dim;
      if (h1) c.embedding_codim = *c.n2 + *h1;
      c.generic_locally_free = n1 == 0;
      c.singular_locus_length = n1;
      out.push_back(std::move(c));
    }
  }
  // window.classes() is already lexicographic and n1 ascends inside each class
  return out;
}

std::int64_t ClassPolynomial::evaluate(const DivisorClass& d) const {
  std::int64_t v = 0;
  for (const auto& [exps, coeff] : terms) {
    std::int64_t m = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int k = 0; k < exps[i]; ++k) m = mul(m, d[i]);
    v = add(v, m);
  }
  return v;
}

namespace {

std::string monomial(const std::vector<int>& exps, std::size_t rank) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += rank == 1 ? "d" : "d" + std::to_string(i + 1);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

int degree(const std::vector<int>& exps) {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

}  // namespace

std::string ClassPolynomial::render(std::size_t rank) const {
  std::vector<std::pair<std::vector<int>, std::int64_t>> ordered;
  for (const auto& t : terms)
    if (t.second != 0) ordered.push_back(t);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first > b.first;
  });
  if (ordered.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& [exps, coeff] = ordered[i];
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (i == 0)
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    const std::string m = monomial(exps, rank);
    if (m.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag)) + m;
  }
  return out;
}

bool AdmissibleRegion::contains(const DivisorClass& d) const {
  if (mul(2, fiber_form.evaluate(d)) > fiber_bound_x2) return false;
  const std::int64_t total = points_total.evaluate(d);
  return total >= 0 && total <= chi_bound.evaluate(d);
}

namespace {

std::vector<int> unit(std::size_t rank, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<int> e(rank, 0);
  ++e[i];
  if (j != SIZE_MAX) ++e[j];
  return e;
}

// coefficient * (D . D) + (D . v) + constant as a polynomial in D's coordinates
ClassPolynomial quadratic_in_d(const SurfaceModel& s, std::int64_t coefficient, const DivisorClass& v,
                               std::int64_t constant) {
  const std::size_t rank = s.ns_rank();
  std::vector<DivisorClass> basis;
  for (std::size_t i = 0; i < rank; ++i) {
    DivisorClass b = s.zero();
    b.coeffs[i] = 1;
    basis.push_back(b);
  }
  ClassPolynomial p;
  if (constant != 0) p.terms[std::vector<int>(rank, 0)] = constant;
  for (std::size_t i = 0; i < rank; ++i) {
    const std::int64_t lin = intersect(s, basis[i], v);
    if (lin != 0) p.terms[unit(rank, i)] += lin;
    for (std::size_t j = i; j < rank; ++j) {
      std::int64_t q = mul(coefficient, intersect(s, basis[i], basis[j]));
      if (i != j) q = mul(q, 2);
      if (q != 0) p.terms[unit(rank, i, j)] += q;
    }
  }
  return p;
}

}  // namespace

AdmissibleRegion admissible_region_description(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2) {
  check_class(s, c1);
  AdmissibleRegion r;
  r.fiber = fiber_class(s);
  r.fiber_form = quadratic_in_d(s, 0, r.fiber, 0);
  r.fiber_bound_x2 = sub(intersect(s, c1, r.fiber), 2);
  // c2 + D(D - c1)
  r.points_total = quadratic_in_d(s, 1, -c1, c2);
  // chi(O(-c1)) + D(2D - 2c1 - K)
  r.chi_bound = quadratic_in_d(s, 2, -(2 * c1) - canonical_class(s), chi_line_bundle(s, -c1));

  const std::size_t rank = s.ns_rank();
  const std::string total = r.points_total.render(rank);
  r.inequalities.push_back(r.fiber_form.render(rank) + " <= " + std::to_string(floor_div(r.fiber_bound_x2, 2)));
  r.inequalities.push_back("0 <= n <= " + total);
  r.inequalities.push_back(total + " <= " + r.chi_bound.render(rank));
  return r;
}

}  // namespace tfbn
