#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace subres {

/* Exact integer coefficients. All arithmetic in this library stays in Z;
 * the only divisions performed are exact (Bareiss pivots, scale factors). */
using Int = mpz_class;

/* Dense univariate polynomial over Z, coefficients stored ascending:
 * c_[j] is the coefficient of x^j. Canonical form is trimmed (no trailing
 * zero coefficients); the zero polynomial is the empty vector. All
 * operations return canonical values. */
class Poly {
  std::vector<Int> c_;

  void trim();

 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);

  static Poly constant(Int v);
  /* v * x^j */
  static Poly monomial(Int v, std::size_t j);

  bool is_zero() const { return c_.empty(); }

  /* Degree of a nonzero polynomial; throws std::domain_error on zero
   * (the zero polynomial has no degree in this library). */
  std::size_t degree() const;

  /* Coefficient of x^j; zero beyond the degree. */
  const Int& coeff(std::size_t j) const;

  /* Leading coefficient; throws on zero. */
  const Int& leading() const;

  const std::vector<Int>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;

  /* p * x^j */
  Poly shifted(std::size_t j) const;
  Poly scaled(const Int& v) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  /* Exact coefficientwise division by v; throws if v == 0 or any
   * coefficient is not divisible. */
  Poly divided_exact(const Int& v) const;

  /* Human-readable form for diagnostics, e.g. "3x^2 - x + 7". */
  std::string str() const;
};

/* v^e for e >= 0 (0^0 == 1). */
Int int_pow(const Int& v, unsigned long e);

}  // namespace subres
