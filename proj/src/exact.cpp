#include "tfbn/exact.hpp"

#include <utility>

#include "tfbn/error.hpp"

namespace tfbn::exact {

namespace {

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(Integer(x.get_num() * (den / x.get_den())));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m);
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  for (const auto& r : a)
    if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix");

  // Bareiss: after step k every entry is a (k+1)-minor, and the division by the
  // previous pivot is exact.
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix a = m;
  for (const auto& row : a)
    if (row.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix");
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_of_col[col] = static_cast<long>(r);
    ++r;
  }
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -a[static_cast<std::size_t>(pivot_of_col[col])][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear_root(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& k, const Poly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= k;
  return Poly(std::move(c));
}

Poly Poly::mod(const Poly& m) const {
  if (m.is_zero()) fail(ErrorKind::InvalidInput, "polynomial reduction modulo zero");
  std::vector<Rational> r = c_;
  const std::size_t dm = m.c_.size() - 1;
  const Rational inv = 1 / m.leading();
  while (r.size() > dm) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const Rational q = r.back() * inv;
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) r[shift + i] -= q * m.c_[i];
    r.pop_back();
  }
  return Poly(std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].get_str() + ")";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace tfbn::exact
