#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "support.hpp"
#include "tfbn/cohomology.hpp"
#include "tfbn/error.hpp"
#include "tfbn/euler.hpp"
#include "tfbn/tf.hpp"

using namespace tfbn;

namespace {

// Hand-written pairings for P2 and the quadric (bidegree convention).
std::int64_t dot(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
  if (s.kind() == SurfaceKind::ProjectivePlane) return a[0] * b[0];
  return a[0] * b[1] + a[1] * b[0];
}

struct Row {
  DivisorClass D;
  std::int64_t n1, n2, dimension;
  auto operator<=>(const Row&) const = default;
};

// Brute force over D in the window and every n1 in [0, 200]; dimension from
// -chi(E,E) = 4c2 - c1^2 - 4 chi(O) plus the chi surplus.
std::vector<Row> brute_force(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2, const Window& w) {
  const DivisorClass f = s.kind() == SurfaceKind::ProjectivePlane ? DivisorClass{1} : DivisorClass{1, 0};
  const std::int64_t prior = 4 * c2 - dot(s, c1, c1) - 4;
  std::vector<Row> out;
  for (const auto& D : w.classes()) {
    const DivisorClass twoD_c1 = 2 * D - c1;
    if (2 * dot(s, D, f) > dot(s, c1, f) - 2) continue;
    const std::int64_t total = c2 + dot(s, D, D - c1);
    const std::int64_t bound = support::chi_reference(s, twoD_c1);
    for (std::int64_t n1 = 0; n1 <= 200; ++n1) {
      const std::int64_t n2 = total - n1;
      if (n2 < 0 || total > bound) continue;
      out.push_back({D, n1, n2, prior + bound - total});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool parity_prioritary(const SurfaceModel& s, const DivisorClass& c1, std::int64_t c2) {
  if (s.kind() == SurfaceKind::ProjectivePlane) return 4 * c2 >= c1[0] * c1[0] - 1;
  const std::int64_t c1f = intersect(s, c1, fiber_class(s));
  if (c1f % 2 != 0) return true;
  return 4 * c2 >= intersect(s, c1, c1);
}

}  // namespace

TEST_CASE("prioritary existence examples") {
  const auto p2 = SurfaceModel::projective_plane();
  CHECK(prioritary_exists(p2, {2, {1}, 0}));
  CHECK_FALSE(prioritary_exists(SurfaceModel::quadric(), {2, {0, 0}, -1}));
  CHECK(prioritary_exists(SurfaceModel::product_ruled(1), {2, {1, 1}, -7}));
  CHECK(prioritary_exists(p2, {1, {5}, 0}));
  CHECK_FALSE(prioritary_exists(p2, {1, {0}, -1}));
  // rank 3 on P2, c1 = 1: d = 2, bound -2
  CHECK(prioritary_exists(p2, {3, {1}, 0}));
  CHECK_FALSE(prioritary_exists(p2, {3, {0}, -1}));
  CHECK(prioritary_failure_reason(p2, {2, {0}, -1}).has_value());
  CHECK_FALSE(prioritary_failure_reason(p2, {2, {0}, 1}).has_value());
}

TEST_CASE("prioritary components") {
  const auto p2 = SurfaceModel::projective_plane();
  const auto c = prioritary_component(p2, {2, {0}, 1});
  REQUIRE(c.has_value());
  CHECK(c->kind == TFKind::Prioritary);
  CHECK(c->dimension == 0);
  CHECK(c->embedding_codim == 0);
  CHECK(c->generic_locally_free);
  CHECK_FALSE(prioritary_component(p2, {2, {0}, -1}).has_value());
  const auto q = prioritary_component(SurfaceModel::quadric(), {2, {1, 1}, 0});
  REQUIRE(q.has_value());
  CHECK(q->dimension == -6);
  CHECK_THROWS_AS(prioritary_component(p2, {3, {0}, 1}), Error);
}

TEST_CASE("rank-2 existence agrees with the parity formulation") {
  for (const auto& s : support::all_models()) {
    for (std::int64_t a = -6; a <= 6; ++a)
      for (std::int64_t b = -6; b <= 6; ++b) {
        const DivisorClass c1 = s.ns_rank() == 1 ? DivisorClass{a} : DivisorClass{a, b};
        for (std::int64_t c2 = -12; c2 <= 12; ++c2) {
          CAPTURE(s.name());
          CAPTURE(to_string(c1));
          CAPTURE(c2);
          CHECK(prioritary_exists(s, {2, c1, c2}) == parity_prioritary(s, c1, c2));
        }
        if (s.ns_rank() == 1) break;
      }
  }
}

TEST_CASE("general-rank existence against a direct search over residues") {
  const auto p2 = SurfaceModel::projective_plane();
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t c1 = -7; c1 <= 7; ++c1)
      for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
        std::int64_t d = 0;
        while ((c1 + d) % r != 0) ++d;
        const bool expected = 2 * r * c2 - (r - 1) * c1 * c1 >= -d * (r - d);
        CHECK(prioritary_exists(p2, {r, {c1}, c2}) == expected);
      }
}

TEST_CASE("nonprioritary admissibility examples") {
  const auto p2 = SurfaceModel::projective_plane();
  CHECK(nonprioritary_admissible(p2, {0}, 2, {-4}, 5));
  CHECK_FALSE(nonprioritary_admissible(p2, {0}, 2, {-1}, 0));
  const auto q = SurfaceModel::quadric();
  CHECK(nonprioritary_admissible(q, {4, 3}, 4, {1, 0}, 1));
  CHECK_FALSE(nonprioritary_admissible(q, {4, 3}, 4, {1, 0}, -1));
  CHECK_FALSE(nonprioritary_admissible(q, {4, 3}, 4, {1, 0}, 2));
  const auto c = nonprioritary_component(q, {4, 3}, 4, {1, 0}, 1);
  REQUIRE(c.has_value());
  CHECK(c->n2 == 0);
  CHECK_FALSE(c->generic_locally_free);
  CHECK(c->singular_locus_length == 1);
}

TEST_CASE("P2 c2 = 2 window example") {
  const auto p2 = SurfaceModel::projective_plane();
  const auto comps = enumerate_nonprioritary(p2, {0}, 2, Window::box(1, -4, -1));
  REQUIRE(comps.size() == 19);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    CHECK(*c.D == DivisorClass{-4});
    CHECK(c.n1 == static_cast<std::int64_t>(i));
    CHECK(c.dimension == 7);
    CHECK(c.embedding_codim == 18 - c.n1);
    CHECK(c.generic_locally_free == (c.n1 == 0));
  }
}

TEST_CASE("quadric c1 = 0, c2 = 0 small window") {
  // Fiber-negative D = (-2,-2), (-2,-3), (-3,-2), (-3,-3) satisfy the chi bound
  // (for example 8 <= chi(O(-4,-4)) = 9), so the list is not empty.
  const auto q = SurfaceModel::quadric();
  const Window w = Window::box(2, -3, 3);
  const auto comps = enumerate_nonprioritary(q, {0, 0}, 0, w);
  CHECK_FALSE(comps.empty());
  std::vector<DivisorClass> Ds;
  for (const auto& c : comps)
    if (Ds.empty() || Ds.back() != *c.D) Ds.push_back(*c.D);
  CHECK(Ds == std::vector<DivisorClass>{{-3, -3}, {-3, -2}, {-2, -3}, {-2, -2}});
}

TEST_CASE("enumeration matches brute force") {
  for (const auto& s : {SurfaceModel::projective_plane(), SurfaceModel::quadric()}) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
      const auto c1 = support::random_class(rng, s.ns_rank(), -4, 4);
      const auto c2 = support::uniform(rng, -4, 8);
      const Window w = Window::box(s.ns_rank(), -6, 6);
      std::vector<Row> got;
      for (const auto& c : enumerate_nonprioritary(s, c1, c2, w)) got.push_back({*c.D, c.n1, *c.n2, c.dimension});
      CHECK(got == brute_force(s, c1, c2, w));
    }
  }
}

TEST_CASE("component invariants and ordering") {
  for (const auto& s : support::all_models()) {
    const auto K = canonical_class(s);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
      const auto c1 = support::random_class(rng, s.ns_rank(), -4, 4);
      const auto c2 = support::uniform(rng, -4, 8);
      const auto comps = enumerate_nonprioritary(s, c1, c2, Window::box(s.ns_rank(), -7, 7));
      const auto prior = prioritary_component(s, {2, c1, c2});
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        const auto& D = *c.D;
        CHECK(c.n1 + *c.n2 == c2 + intersect(s, D, D - c1));
        const auto chiEE = chi_self_rank2(s, c1, c2);
        CHECK(c.dimension == -chiEE + chi_line_bundle(s, 2 * D - c1) - c.n1 - *c.n2);
        CHECK(c.dimension == -chiEE + chi_line_bundle(s, -c1) + intersect(s, D, D - c1 - K) - c2);
        if (prior) CHECK(c.dimension >= prior->dimension);
        if (cohomology_supported(s))
          CHECK(c.embedding_codim == *c.n2 + h1_of(s, 2 * D - c1));
        else
          CHECK_FALSE(c.embedding_codim.has_value());
        if (i > 0) CHECK(std::tie(comps[i - 1].D, comps[i - 1].n1) < std::tie(comps[i].D, comps[i].n1));
      }
    }
  }
}

TEST_CASE("enumeration is deterministic and respects the window") {
  const auto q = SurfaceModel::quadric();
  const Window w{{{-5, 1}, {-4, 0}}};
  const auto a = enumerate_nonprioritary(q, {1, 2}, 3, w);
  const auto b = enumerate_nonprioritary(q, {1, 2}, 3, w);
  CHECK(a == b);
  for (const auto& c : a) CHECK(w.contains(*c.D));
  const Window empty{{{1, 0}, {0, 0}}};
  CHECK(empty.empty());
  CHECK(enumerate_nonprioritary(q, {1, 2}, 3, empty).empty());
  CHECK(enumerate_nonprioritary(SurfaceModel::projective_plane(), {0}, 2, Window::box(1, 3, 2)).empty());
}

TEST_CASE("admissible region description") {
  const auto p2 = SurfaceModel::projective_plane();
  const auto r = admissible_region_description(p2, {0}, 2);
  CHECK(r.inequalities == std::vector<std::string>{"d <= -1", "0 <= n <= 2 + d^2", "2 + d^2 <= 1 + 3d + 2d^2"});
  const auto r0 = admissible_region_description(p2, {0}, 0);
  for (std::int64_t d = -12; d <= 5; ++d) CHECK(r0.contains({d}) == (d <= -3));
  const auto rq = admissible_region_description(SurfaceModel::quadric(), {0, 0}, 0);
  CHECK(rq.inequalities.front() == "d2 <= -1");
  // region membership agrees with the enumerator on every surface
  for (const auto& s : support::all_models()) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      const auto c1 = support::random_class(rng, s.ns_rank(), -4, 4);
      const auto c2 = support::uniform(rng, -4, 8);
      const auto reg = admissible_region_description(s, c1, c2);
      const Window w = Window::box(s.ns_rank(), -6, 6);
      const auto comps = enumerate_nonprioritary(s, c1, c2, w);
      for (const auto& D : w.classes()) {
        const bool listed = std::any_of(comps.begin(), comps.end(), [&](const TFComponent& c) { return *c.D == D; });
        CHECK(reg.contains(D) == listed);
        CHECK(reg.points_total.evaluate(D) == c2 + intersect(s, D, D - c1));
        CHECK(reg.chi_bound.evaluate(D) == chi_line_bundle(s, 2 * D - c1));
      }
    }
  }
}
