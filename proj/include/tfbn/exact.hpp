#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

// Exact rational linear algebra and univariate polynomials over Q.
namespace tfbn::exact {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Each row is scaled to
/// an integer row first, which leaves the rank unchanged.
std::size_t rank(const RationalMatrix& m);

/// A basis of {x : m x = 0}. Rows of m must all have length `cols`.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

/// Dense univariate polynomial, coefficient i multiplies t^i. The zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  /// t - root
  static Poly linear_root(const Rational& root);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& k, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Remainder modulo a nonzero polynomial.
  Poly mod(const Poly& m) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

bool is_squarefree(const Poly& p);

}  // namespace tfbn::exact
