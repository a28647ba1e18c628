#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nilzeta {

/// Dense univariate polynomial over the integers, coefficient i at x^i.
/// Trailing zeros are never stored; the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  /// c x^k
  static IntPoly monomial(std::size_t k, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const mpz_class& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  mpz_class eval(const mpz_class& x) const;
  IntPoly derivative() const;
  /// gcd of the coefficients, sign of the leading coefficient (0 for zero).
  mpz_class content() const;
  IntPoly primitive_part() const;
  /// p(k x)
  IntPoly scale_argument(const mpz_class& k) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Exact division over Z: true and the quotient when `d` divides `a`.
bool divides(const IntPoly& d, const IntPoly& a, IntPoly* quotient = nullptr);

/// gcd over Z, primitive with positive leading coefficient (times the gcd
/// of the contents).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// d-th cyclotomic polynomial, by dividing y^d - 1 by Φ_e for e | d, e < d.
IntPoly cyclotomic(unsigned d);

/// Irreducible factors of a nonconstant primitive polynomial, each primitive
/// with positive leading coefficient, repeated by multiplicity and sorted.
/// Integer content and sign are left to the caller.
///
/// Rational roots first, then Kronecker's interpolation method on what is
/// left (degree at most 12).
std::vector<IntPoly> factor_kronecker(const IntPoly& f);

/// Same contract as factor_kronecker, for any degree: squarefree splitting,
/// Cantor-Zassenhaus modulo a small prime, Hensel lifting past the Mignotte
/// bound, and recombination of the lifted factors.
std::vector<IntPoly> factor_zassenhaus(const IntPoly& f);

/// Canonical order used for factor lists: degree, then coefficients.
bool poly_less(const IntPoly& a, const IntPoly& b);

}  // namespace nilzeta
