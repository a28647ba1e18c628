#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "nilzeta/intpoly.hpp"

namespace nilzeta {

/// Canonical rational: gmp keeps gcd 1 and a positive denominator.
using ExactRational = mpq_class;

/// Σ a_n / n^s with finitely many nonzero integer a_n.
class DirichletPolynomial {
 public:
  using Terms = std::map<std::uint64_t, mpz_class>;

  DirichletPolynomial() = default;
  explicit DirichletPolynomial(const Terms& terms);

  static DirichletPolynomial constant(const mpz_class& c);
  static DirichletPolynomial one() { return constant(1); }
  /// c / n^s
  static DirichletPolynomial term(std::uint64_t n, const mpz_class& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coeff(std::uint64_t n) const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c / n^s in place.
  void add_term(std::uint64_t n, const mpz_class& c);

  DirichletPolynomial operator+(const DirichletPolynomial& o) const;
  DirichletPolynomial operator-(const DirichletPolynomial& o) const;
  DirichletPolynomial operator-() const;
  /// Dirichlet convolution; throws BadInput when an index overflows 64 bits.
  DirichletPolynomial operator*(const DirichletPolynomial& o) const;
  bool operator==(const DirichletPolynomial& o) const { return terms_ == o.terms_; }

  /// Σ a_n n^{-s}, exact; an integer whenever s <= 0.
  ExactRational eval_at(long s) const;

  /// Terms as \frac{a_n}{n^s}, indices ascending; "0" for the zero series.
  std::string to_latex() const;
  /// Plain text, e.g. "1/2^s + 3/3^s - 3/6^s".
  std::string to_string() const;
  /// {"terms": [[n, a_n], ...]}; values that do not fit in 64 bits are strings.
  nlohmann::json to_json() const;
  static DirichletPolynomial from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

/// Whether the product of `factors` equals `product` exactly.
bool verify_factorization(const DirichletPolynomial& product, const std::vector<DirichletPolynomial>& factors);

/// Factors a series supported on powers of p as a polynomial in y = 1/p^s.
/// Nonconstant factors are primitive with a positive coefficient at their
/// smallest index; a constant factor (content and sign) comes first when it
/// is not 1. The product of the result is exactly `a`. Throws
/// UnsupportedSupport when an index is not a power of p.
std::vector<DirichletPolynomial> factor_single_prime(const DirichletPolynomial& a, std::uint64_t p);

/// y = 1/p^s view of a single-prime series (index p^k -> coefficient of y^k).
IntPoly to_single_prime_poly(const DirichletPolynomial& a, std::uint64_t p);
DirichletPolynomial from_single_prime_poly(const IntPoly& f, std::uint64_t p);

enum class Irreducibility { Irreducible, Factored, Inconclusive };
std::string to_string(Irreducibility v);

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Inconclusive;
  /// For Factored: a nontrivial factorization whose product is the input.
  std::vector<DirichletPolynomial> factors;
  /// Candidate factor supports examined.
  std::uint64_t candidates = 0;
  std::string detail;
};

/// Decides irreducibility in Z[x_p : p prime] (x_p = 1/p^s).
///
/// The series is mapped to one variable by x_j -> y^{D_j}, with D the mixed
/// radix of the per-prime degree box, which is injective on every possible
/// factor. The image is factored over Z; every subset of its irreducible
/// factors is mapped back and tested by exact multiplication. Irreducible is
/// reported only after all subsets were examined within `budget`.
///
/// Zero and the units ±1 are neither irreducible nor reducible and come back
/// Inconclusive with a detail message.
IrreducibilityResult irreducibility_search(const DirichletPolynomial& a, std::uint64_t budget = 1000000);

}  // namespace nilzeta
