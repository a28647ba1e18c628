#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "nilzeta/dirichlet.hpp"
#include "nilzeta/group.hpp"
#include "nilzeta/mask.hpp"

namespace nilzeta {

inline constexpr std::uint64_t kDefaultOrbitBudget = 50000000;

/// k_n(G) = P_2(G, n+1) |G|^n.
mpz_class k_count(const FiniteGroup& g, unsigned n);

/// k_n(G) = -(1/|G|) Σ_{N_2(G)} μ_2(H,G) |H|^{n+1}.
mpz_class k_count_mobius(const FiniteGroup& g, unsigned n);

/// Conjugation orbits of commuting n-tuples, counted as the tuples that are
/// lexicographically least in their orbit. `budget` caps tuple-conjugate
/// comparisons (BudgetExceeded).
mpz_class k_count_brute(const FiniteGroup& g, unsigned n, std::uint64_t budget = kDefaultOrbitBudget);

struct KCountRoutes {
  mpz_class series;
  mpz_class mobius;
  std::optional<mpz_class> brute;  // unset when skipped or over budget
  bool agree() const { return series == mobius && (!brute || *brute == series); }
};
KCountRoutes k_count_routes(const FiniteGroup& g, unsigned n, bool run_brute = true,
                            std::uint64_t budget = kDefaultOrbitBudget);

struct BoundComparison {
  std::string label;
  ExactRational lhs;
  ExactRational rhs;
  /// "<=" or "==" (mod the report's modulus)
  std::string relation;
  bool holds = false;
  /// rhs - lhs for "<="; (lhs - rhs) mod D for congruences
  ExactRational margin;
};

struct BoundReport {
  std::string name;
  std::string group;
  unsigned n = 0;
  std::vector<std::pair<std::string, mpz_class>> parameters;
  std::vector<BoundComparison> comparisons;

  bool holds() const;
  nlohmann::json to_json() const;
};

/// |G:H|^{-2n} P_2(H,n) <= P_2(G,n) <= P_2(H,n) and
/// |G:H|^{-1} k_n(H) <= k_n(G) <= |G:H|^n k_n(H). BadInput if H is not a subgroup.
BoundReport check_subgroup_bounds(const FiniteGroup& g, const ElementMask& h, unsigned n);

/// P_2(G,n) <= P_2(G/N,n) P_2(N,n) and k_n(G) <= k_n(G/N) k_n(N). NotNormal.
BoundReport check_quotient_bound(const FiniteGroup& g, const ElementMask& normal, unsigned n);

/// P_2(G,n+1) <= (p^n+...+p+1) c^n / (p^n |G|^n), c the largest centralizer of
/// a noncentral element, p the least prime dividing |G:Z(G)|. GroupIsAbelian.
BoundReport check_centralizer_bound(const FiniteGroup& g, unsigned n);

/// (mn+m-n)/m^{n+1} <= P_2(G,n+1) <= (p^{n+1}+p^n-1)/p^{2n+1} and
/// P_2(G,n+1) <= (3·2^n-1)/2^{2n+1}, with m = |G:Z(G)|. GroupIsAbelian.
BoundReport check_center_bounds(const FiniteGroup& g, unsigned n);

/// k_{n-1}(G) ≡ |G|^{n-1} (mod D_n), D_n = gcd(p^n - 1 : p | |G|). n >= 2.
BoundReport check_congruence(const FiniteGroup& g, unsigned n);

}  // namespace nilzeta
