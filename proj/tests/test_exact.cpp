#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tfbn/exact.hpp"

using namespace tfbn::exact;

namespace {

// Textbook Gaussian elimination over Q with division, for comparison.
std::size_t naive_rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Rational k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int target_rank) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 7);
  // product of rows x k and k x cols has rank <= k
  RationalMatrix a(rows, std::vector<Rational>(target_rank)), b(target_rank, std::vector<Rational>(cols));
  for (auto& row : a)
    for (auto& x : row) x = Rational(coef(rng), den(rng));
  for (auto& row : b)
    for (auto& x : row) x = Rational(coef(rng), den(rng));
  RationalMatrix m(rows, std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < target_rank; ++k) m[i][j] += a[i][k] * b[k][j];
  for (auto& row : m)
    for (auto& x : row) x.canonicalize();
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank({}) == 0);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{1, 2}, {3, 4}}) == 2);
  CHECK(rank({{Rational(1, 3), Rational(1, 2)}, {Rational(2, 3), 1}}) == 1);
  // evaluation of {1, x, y, x^2, xy, y^2} at four collinear points
  RationalMatrix conic;
  for (int t = 0; t < 4; ++t) conic.push_back({1, t, t, t * t, t * t, t * t});
  CHECK(rank(conic) == 3);
}

TEST_CASE("rank agrees with naive elimination and is invariant under permutations and scaling") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 8), coef(-9, 9), den(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const int k = std::uniform_int_distribution<int>(1, static_cast<int>(std::min(rows, cols)))(rng);
    auto m = random_matrix(rng, rows, cols, k);
    const auto r = rank(m);
    CHECK(r == naive_rank(m));
    CHECK(r <= static_cast<std::size_t>(k));

    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    RationalMatrix p(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      Rational scale;
      do scale = Rational(coef(rng), den(rng));
      while (scale == 0);
      scale.canonicalize();
      for (std::size_t j = 0; j < cols; ++j) p[i][j] = scale * m[rp[i]][cp[j]];
    }
    CHECK(rank(p) == r);
  }
}

TEST_CASE("nullspace") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 6;
    const auto m = random_matrix(rng, rows, cols, 1 + trial % 3);
    const auto ns = nullspace(m, cols);
    CHECK(ns.size() + rank(m) == cols);
    for (const auto& v : ns)
      for (const auto& row : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    CHECK(rank(ns) == ns.size());
  }
  CHECK(nullspace({}, 3).size() == 3);
}

TEST_CASE("polynomial arithmetic") {
  const Poly t = Poly::linear_root(0);
  const Poly one = Poly::constant(1);
  CHECK(t.degree() == 1);
  CHECK(Poly().degree() == -1);
  CHECK(Poly({0, 0}).is_zero());
  const Poly p = (t - one) * (t - Poly::constant(2));  // t^2 - 3t + 2
  CHECK(p.coeffs() == std::vector<Rational>{2, -3, 1});
  CHECK(p(Rational(1)) == 0);
  CHECK(p(Rational(3)) == 2);
  CHECK(p.derivative().coeffs() == std::vector<Rational>{-3, 2});
  CHECK((Rational(2) * p).monic() == p);
  CHECK(p.mod(t - one).is_zero());
  CHECK(p.mod(t).coeffs() == std::vector<Rational>{2});
  CHECK(gcd(p, (t - one) * (t + one)) == t - one);
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(is_squarefree(p));
  CHECK_FALSE(is_squarefree(p * (t - one)));
  CHECK(is_squarefree(t * t + one));
  CHECK_FALSE(t.to_string().empty());
}

TEST_CASE("division identity") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-6, 6), deg(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a(deg(rng) + 1), b(deg(rng) + 1);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    b.back() = 1 + trial % 3;
    const Poly pa(a), pb(b);
    const Poly r = pa.mod(pb);
    CHECK(r.degree() < pb.degree());
    // pa - r is divisible by pb
    CHECK((pa - r).mod(pb).is_zero());
    const Poly g = gcd(pa, pb);
    if (!pa.is_zero()) {
      CHECK(pa.mod(g).is_zero());
      CHECK(pb.mod(g).is_zero());
    }
  }
}
