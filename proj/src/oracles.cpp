#include "tfbn/oracles.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tfbn/checked.hpp"
#include "tfbn/cohomology.hpp"
#include "tfbn/error.hpp"
#include "tfbn/euler.hpp"

namespace tfbn {

using exact::Poly;
using exact::Rational;

namespace {

constexpr int kMaxAttempts = 64;
constexpr std::int64_t kPointRange = 50;
constexpr std::int64_t kCoeffRange = 6;

void require_bn_surface(const SurfaceModel& s) {
  if (s.kind() != SurfaceKind::ProjectivePlane && s.kind() != SurfaceKind::Quadric)
    fail(ErrorKind::UnsupportedSurface, "point-configuration oracles run on p2 and quadric only");
}

void require_nonnegative(const SurfaceModel& s, const DivisorClass& d) {
  check_class(s, d);
  for (auto c : d.coeffs)
    if (c < 0) fail(ErrorKind::ENotEffective, "class " + to_string(d) + " has no monomial basis");
}

// Portable uniform draws: mt19937_64 is fully specified, the standard
// distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = gen_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  Poly poly(long degree) {
    std::vector<Rational> c;
    for (long i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(uniform(-kCoeffRange, kCoeffRange)));
    return Poly(std::move(c));
  }

 private:
  std::mt19937_64 gen_;
};

Poly power(const Poly& p, int k) {
  Poly r = Poly::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

Rational rpow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

// The implicit equation of the image, when the image is a curve of class d
// (exactly one relation among the pulled-back monomials).
std::optional<std::vector<Rational>> implicit_equation(const SurfaceModel& s, const DivisorClass& d,
                                                       const CurveParametrization& param) {
  const auto basis = monomial_basis(s, d);
  std::vector<Poly> pulled;
  std::size_t len = 0;
  for (const auto& m : basis) {
    pulled.push_back(param.pullback(s, d, m));
    len = std::max(len, pulled.back().coeffs().size());
  }
  exact::RationalMatrix rows(len, std::vector<Rational>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < len; ++i) rows[i][j] = pulled[j].coeff(i);
  auto kernel = exact::nullspace(rows, basis.size());
  if (kernel.size() != 1) return std::nullopt;
  return kernel.front();
}

std::vector<Poly> pulled_basis(const SurfaceModel& s, const DivisorClass& d, const CurveParametrization& p) {
  std::vector<Poly> out;
  for (const auto& m : monomial_basis(s, d)) out.push_back(p.pullback(s, d, m));
  return out;
}

CurveParametrization random_parametrization(const SurfaceModel& s, const DivisorClass& d, Draw& draw) {
  CurveParametrization p;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    for (int i = 0; i < 3; ++i) p.coords.push_back(draw.poly(d[0]));
  } else {
    // The first projection has degree d.(1,0) = d2, the second degree d1.
    p.coords.push_back(draw.poly(d[1]));
    p.coords.push_back(draw.poly(d[1]));
    p.coords.push_back(draw.poly(d[0]));
    p.coords.push_back(draw.poly(d[0]));
  }
  return p;
}

bool in_chart(const SurfaceModel& s, const CurveParametrization& p, const Rational& t) {
  if (s.kind() == SurfaceKind::ProjectivePlane) return p.coords[0](t) != 0;
  return p.coords[0](t) != 0 && p.coords[2](t) != 0;
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(const SurfaceModel& s, const DivisorClass& d) {
  require_bn_surface(s);
  require_nonnegative(s, d);
  std::vector<std::vector<int>> out;
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const int e = static_cast<int>(d[0]);
    for (int j = 0; j <= e; ++j)
      for (int k = 0; j + k <= e; ++k) out.push_back({e - j - k, j, k});
  } else {
    for (int i = 0; i <= d[0]; ++i)
      for (int j = 0; j <= d[1]; ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<Rational> evaluate_basis(const SurfaceModel& s, const DivisorClass& d, const AffinePoint& p) {
  std::vector<Rational> row;
  for (const auto& m : monomial_basis(s, d)) {
    if (s.kind() == SurfaceKind::ProjectivePlane)
      row.push_back(rpow(p.x, m[1]) * rpow(p.y, m[2]));
    else
      row.push_back(rpow(p.x, m[0]) * rpow(p.y, m[1]));
  }
  return row;
}

Poly CurveParametrization::pullback(const SurfaceModel& s, const DivisorClass& d, const std::vector<int>& m) const {
  if (s.kind() == SurfaceKind::ProjectivePlane)
    return power(coords[0], m[0]) * power(coords[1], m[1]) * power(coords[2], m[2]);
  const int i = m[0], j = m[1];
  return power(coords[1], i) * power(coords[0], static_cast<int>(d[0]) - i) * power(coords[3], j) *
         power(coords[2], static_cast<int>(d[1]) - j);
}

AffinePoint CurveParametrization::point_at(const SurfaceModel& s, const Rational& t) const {
  if (!in_chart(s, *this, t)) fail(ErrorKind::ChartViolation, "parameter maps outside the affine chart");
  if (s.kind() == SurfaceKind::ProjectivePlane) {
    const Rational x0 = coords[0](t);
    return {coords[1](t) / x0, coords[2](t) / x0};
  }
  return {coords[1](t) / coords[0](t), coords[3](t) / coords[2](t)};
}

std::int64_t PointConfiguration::n_on_curve() const {
  std::int64_t k = static_cast<std::int64_t>(points.size()) - n_free;
  for (const auto& c : clusters) k += c.roots.degree();
  return k;
}

std::int64_t PointConfiguration::length() const { return n_free + n_on_curve(); }


HilbertReport hilbert_function(const SurfaceModel& s, const DivisorClass& E, const PointConfiguration& config) {
  require_bn_surface(s);
  require_nonnegative(s, E);
  if (config.n_free < 0 || config.n_free > static_cast<std::int64_t>(config.points.size()))
    fail(ErrorKind::InvalidInput, "n_free exceeds the number of points");

  for (std::size_t i = 0; i < config.points.size(); ++i)
    for (std::size_t j = i + 1; j < config.points.size(); ++j)
      if (config.points[i] == config.points[j]) fail(ErrorKind::DegenerateInput, "duplicate points");

  const std::size_t on_curve_rational = config.points.size() - static_cast<std::size_t>(config.n_free);
  if (!config.on_curve_parameters.empty()) {
    if (!config.curve || config.on_curve_parameters.size() != on_curve_rational)
      fail(ErrorKind::InvalidInput, "on-curve parameters need a parametrization and one value per point");
    for (std::size_t i = 0; i < on_curve_rational; ++i)
      if (config.curve->point_at(s, config.on_curve_parameters[i]) !=
          config.points[static_cast<std::size_t>(config.n_free) + i])
        fail(ErrorKind::DegenerateInput, "on-curve point does not match its parameter");
  }
  if (config.curve_class && !config.curve_coefficients.empty()) {
    for (std::size_t i = 0; i < config.points.size(); ++i) {
      const bool on = dot(config.curve_coefficients, evaluate_basis(s, *config.curve_class, config.points[i])) == 0;
      const bool is_free = static_cast<std::int64_t>(i) < config.n_free;
      if (!is_free && !on) fail(ErrorKind::DegenerateInput, "on-curve point misses the curve equation");
    }
  }
  if (!config.clusters.empty() && !config.curve)
    fail(ErrorKind::InvalidInput, "parameter clusters need a parametrization");
  for (std::size_t i = 0; i < config.clusters.size(); ++i) {
    const Poly& q = config.clusters[i].roots;
    if (q.degree() < 1 || !exact::is_squarefree(q)) fail(ErrorKind::DegenerateInput, "cluster is not squarefree");
    for (std::size_t j = i + 1; j < config.clusters.size(); ++j)
      if (exact::gcd(q, config.clusters[j].roots).degree() > 0)
        fail(ErrorKind::DegenerateInput, "clusters share points");
    for (const auto& t : config.on_curve_parameters)
      if (q(t) == 0) fail(ErrorKind::DegenerateInput, "cluster contains a rational on-curve point");
  }

  exact::RationalMatrix rows;
  for (const auto& p : config.points) rows.push_back(evaluate_basis(s, E, p));
  if (!config.clusters.empty()) {
    const auto pulled = pulled_basis(s, E, *config.curve);
    for (const auto& cluster : config.clusters) {
      const auto deg = static_cast<std::size_t>(cluster.roots.degree());
      exact::RationalMatrix block(deg, std::vector<Rational>(pulled.size(), 0));
      for (std::size_t m = 0; m < pulled.size(); ++m) {
        const Poly r = pulled[m].mod(cluster.roots);
        for (std::size_t k = 0; k < deg; ++k) block[k][m] = r.coeff(k);
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }
  }

  HilbertReport rep;
  rep.length = config.length();
  const CohomologyTriple hE = line_cohomology(s, E);
  rep.h0_E = hE.h0;
  rep.rank = static_cast<std::int64_t>(exact::rank(rows));
  rep.h0_ideal = rep.h0_E - rep.rank;
  rep.h1_ideal = rep.h0_ideal - (chi_line_bundle(s, E) - rep.length);
  rep.expected_h1 = config.expected_h1;
  // h1(I_X(E)) = N - rank because H1 and H2 of O(E) vanish for effective E here.
  if (hE.h1 != 0 || hE.h2 != 0 || rep.h1_ideal != rep.length - rep.rank)
    fail(ErrorKind::AdmissibilityViolation, "Hilbert function bookkeeping is inconsistent");
  return rep;
}

namespace {

// No shared coordinate (no two points on a ruling, or on a line through a
// coordinate point of P2), and on P2 no three points on a line.
bool in_general_position(const SurfaceModel& s, const std::vector<AffinePoint>& pts, const AffinePoint& p) {
  for (const auto& q : pts)
    if (q.x == p.x || q.y == p.y) return false;
  if (s.kind() != SurfaceKind::ProjectivePlane) return true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& a = pts[i];
      const auto& b = pts[j];
      if ((b.x - a.x) * (p.y - a.y) == (b.y - a.y) * (p.x - a.x)) return false;
    }
  return true;
}

}  // namespace

PointConfiguration general_configuration(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                         std::uint64_t seed) {
  require_bn_surface(s);
  require_nonnegative(s, E);
  if (N < 0 || N > 2 * kPointRange + 1) fail(ErrorKind::InvalidInput, "point count outside the sampling range");
  Draw draw(seed);
  PointConfiguration c;
  while (static_cast<std::int64_t>(c.points.size()) < N) {
    AffinePoint p{Rational(static_cast<long>(draw.uniform(-kPointRange, kPointRange))),
                  Rational(static_cast<long>(draw.uniform(-kPointRange, kPointRange)))};
    if (!in_general_position(s, c.points, p)) continue;
    c.points.push_back(p);
  }
  c.n_free = N;
  c.expected_h1 = std::max<std::int64_t>(0, N - line_cohomology(s, E).h0);
  return c;
}

PointConfiguration sample_component_configuration(const SurfaceModel& s, const DivisorClass& E, std::int64_t N,
                                                  const BNComponent& comp, std::uint64_t seed) {
  require_bn_surface(s);
  if (comp.kind != BNKind::CurveType || !comp.D)
    fail(ErrorKind::InvalidInput, "only curve-type components have a point-configuration model");
  const DivisorClass& D = *comp.D;
  const DivisorClass K = canonical_class(s);
  const std::int64_t genus = chi_line_bundle(s, D + K);
  const std::int64_t on_curve = N - comp.n;
  Draw draw(seed);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PointConfiguration c;
    c.curve_class = D;
    c.expected_h1 = 1;
    CurveParametrization param = random_parametrization(s, D, draw);
    auto equation = implicit_equation(s, D, param);
    if (!equation) continue;
    c.curve_coefficients = *equation;

    const auto lies_on_curve = [&](const AffinePoint& p) {
      return dot(c.curve_coefficients, evaluate_basis(s, D, p)) == 0;
    };

    // n free points, off the curve.
    bool ok = true;
    std::vector<AffinePoint> free_points;
    for (int tries = 0; static_cast<std::int64_t>(free_points.size()) < comp.n; ++tries) {
      if (tries > 1000) {
        ok = false;
        break;
      }
      AffinePoint p{Rational(static_cast<long>(draw.uniform(-kPointRange, kPointRange))),
                    Rational(static_cast<long>(draw.uniform(-kPointRange, kPointRange)))};
      if (lies_on_curve(p) || std::find(free_points.begin(), free_points.end(), p) != free_points.end()) continue;
      free_points.push_back(p);
    }
    if (!ok) continue;

    std::int64_t rational_on_curve = on_curve;
    std::optional<Poly> cluster;
    if (comp.gamma_degree < genus) {
      // The points on C form Gamma + (G . C) with G in |E - K - D|.
      const DivisorClass residual = E - K - D;
      bool effective = true;
      for (auto x : residual.coeffs) effective = effective && x >= 0;
      if (!effective)
        fail(ErrorKind::SamplingFailure, "class E - K - D = " + to_string(residual) + " is not effective");
      Poly g;
      for (const auto& m : pulled_basis(s, residual, param))
        g = g + Rational(static_cast<long>(draw.uniform(-kCoeffRange, kCoeffRange))) * m;
      if (g.degree() != on_curve - comp.gamma_degree || !exact::is_squarefree(g)) continue;
      cluster = g;
      rational_on_curve = comp.gamma_degree;
    }

    std::vector<AffinePoint> curve_points;
    std::vector<Rational> params;
    for (int tries = 0; static_cast<std::int64_t>(curve_points.size()) < rational_on_curve; ++tries) {
      if (tries > 1000) {
        ok = false;
        break;
      }
      const Rational t(static_cast<long>(draw.uniform(-kPointRange, kPointRange)));
      if (!in_chart(s, param, t) || std::find(params.begin(), params.end(), t) != params.end()) continue;
      if (cluster && (*cluster)(t) == 0) continue;
      const AffinePoint p = param.point_at(s, t);
      if (std::find(curve_points.begin(), curve_points.end(), p) != curve_points.end()) continue;
      if (std::find(free_points.begin(), free_points.end(), p) != free_points.end()) continue;
      curve_points.push_back(p);
      params.push_back(t);
    }
    if (!ok) continue;

    c.points = free_points;
    c.points.insert(c.points.end(), curve_points.begin(), curve_points.end());
    c.n_free = comp.n;
    c.on_curve_parameters = params;
    if (cluster) c.clusters.push_back({*cluster});
    c.curve = std::move(param);
    return c;
  }
  fail(ErrorKind::SamplingFailure, "no usable configuration after " + std::to_string(kMaxAttempts) + " attempts");
}

CrossRulingReport cross_ruling_diagnostic(const DivisorClass& c1, std::int64_t c2, const Window& window) {
  const SurfaceModel q = SurfaceModel::quadric();
  check_class(q, c1);
  const auto swap = [](const DivisorClass& d) { return DivisorClass{d[1], d[0]}; };

  CrossRulingReport rep;
  rep.first = enumerate_nonprioritary(q, c1, c2, window);
  Window swapped = window;
  if (swapped.rank() == 2) std::swap(swapped.ranges[0], swapped.ranges[1]);
  rep.second = enumerate_nonprioritary(q, swap(c1), c2, swapped);
  for (auto& comp : rep.second) comp.D = swap(*comp.D);

  using Key = std::tuple<DivisorClass, std::int64_t, std::int64_t>;
  const auto key = [](const TFComponent& c) { return Key{*c.D, c.dimension, c.embedding_codim.value_or(-1)}; };
  std::map<Key, std::vector<std::size_t>> pool;
  for (std::size_t j = 0; j < rep.second.size(); ++j) pool[key(rep.second[j])].push_back(j);
  std::vector<bool> used(rep.second.size(), false);
  for (std::size_t i = 0; i < rep.first.size(); ++i) {
    auto it = pool.find(key(rep.first[i]));
    if (it == pool.end() || it->second.empty()) {
      rep.unmatched_first.push_back(i);
      continue;
    }
    const std::size_t j = it->second.front();
    it->second.erase(it->second.begin());
    used[j] = true;
    rep.matched.emplace_back(i, j);
  }
  for (std::size_t j = 0; j < rep.second.size(); ++j)
    if (!used[j]) rep.unmatched_second.push_back(j);
  return rep;
}

}  // namespace tfbn
