#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilzeta/dirichlet.hpp"

namespace nilzeta {

struct ReferenceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  bool stretch = false;
};

/// c0 + c1/p^s + c2/p^{2s} + ...
DirichletPolynomial single_prime_series(std::uint64_t p, const std::vector<long>& coeffs);

/// The reference R_2(M_11, s), signs as stored.
DirichletPolynomial reference_r2_m11();

enum class ReferenceTopic { Series, Mobius, Euler, Homology, Factorization, Symmetric, PslClosedForm, Stretch };

/// The reference values of one kind. Stretch holds the M_11 items.
std::vector<ReferenceCheck> reference_checks(ReferenceTopic topic);

/// Replays every reference value: series, Möbius table, Euler
/// characteristics, homology, factorizations, the PSL(2,p) closed form and
/// the symmetric-group pair counts. The M_11 items run only with
/// `include_stretch`.
std::vector<ReferenceCheck> run_reference_checks(bool include_stretch);

/// Term-by-term comparison; empty when equal.
std::vector<std::string> term_differences(const DirichletPolynomial& expected, const DirichletPolynomial& got);

nlohmann::json to_json(const std::vector<ReferenceCheck>& checks);

}  // namespace nilzeta
