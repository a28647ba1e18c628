#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "nilzeta/dirichlet.hpp"
#include "nilzeta/group.hpp"
#include "nilzeta/lattice.hpp"

namespace nilzeta {

inline constexpr std::uint64_t kDefaultTupleBudget = 100000000;

/// Σ coeff · h^s over subgroup orders h.
class LiftPolynomial {
 public:
  const std::map<std::uint64_t, mpz_class>& terms() const noexcept { return terms_; }
  void add_term(std::uint64_t h, const mpz_class& c);
  mpz_class eval_at(unsigned s) const;
  nlohmann::json to_json() const;
  bool operator==(const LiftPolynomial&) const = default;

 private:
  std::map<std::uint64_t, mpz_class> terms_;
};

/// -Σ μ_q(A,G) / |G:A|^s over the records; the constant 1 when the top is in
/// the family (class(G) < q).
DirichletPolynomial series_from_poset(const NilpotentPoset& poset);

/// P_q(G, s).
DirichletPolynomial series_pq(const FiniteGroup& g, unsigned q, const LatticeOptions& options = {});
/// R_q(G, s) = 1 - P_q(G, s).
DirichletPolynomial series_rq(const FiniteGroup& g, unsigned q, const LatticeOptions& options = {});

/// Number of s-tuples generating a subgroup of class < q. Memoized on the
/// subgroup generated so far; `budget` caps subgroup extensions
/// (BudgetExceeded). The first coordinate is split across `jobs` workers.
mpz_class brute_hom_count(const FiniteGroup& g, unsigned q, unsigned s,
                          std::uint64_t budget = kDefaultTupleBudget, unsigned jobs = 1);

/// Number of s-tuples by generated subgroup, as (subgroup, count) pairs in
/// canonical subgroup order.
std::vector<std::pair<ElementMask, mpz_class>> tuple_distribution(const FiniteGroup& g, unsigned s,
                                                                  std::uint64_t budget = kDefaultTupleBudget);

/// Φ_q(G, N, s) = -Σ_{H ∈ N_q(G)} μ_q(H,G) |H|^s. The value does not depend on
/// N, which is only checked for normality (NotNormal). Evaluated at s it is
/// the number of s-tuples of G generating a class < q subgroup.
LiftPolynomial lift_series(const FiniteGroup& g, const ElementMask& n, unsigned q);

/// P_q(G, s) / P_q(G/N, s) at an integer s. NotNormal, ZeroDenominator.
ExactRational conditional_probability(const FiniteGroup& g, const ElementMask& n, unsigned q, long s);

/// Restriction of P_q to the H with |H|_p = |G|_p.
DirichletPolynomial localize_p_part(const FiniteGroup& g, unsigned q, std::uint64_t p);
/// Restriction of P_q to the terms whose index is p^k, k >= 1.
DirichletPolynomial localize_p_index(const FiniteGroup& g, unsigned q, std::uint64_t p);

/// Number of s-tuples of pairwise commuting elements of p-power order (the
/// identity included), from the Möbius function of the poset of abelian
/// p-subgroups with a formal top.
mpz_class abelian_p_count(const FiniteGroup& g, std::uint64_t p, unsigned s);
/// abelian_p_count / |G|^s.
ExactRational abelian_p_probability(const FiniteGroup& g, std::uint64_t p, unsigned s);
/// The same count by enumerating tuples.
mpz_class abelian_p_count_brute(const FiniteGroup& g, std::uint64_t p, unsigned s);

/// Smallest q >= 2 from which P_q(G, s) no longer changes: one more than the
/// largest class of a proper nilpotent subgroup, and one more than class(G)
/// when G itself is nilpotent.
unsigned stabilization_index(const FiniteGroup& g);

/// Commuting is transitive on noncentral elements.
bool is_tc_group(const FiniteGroup& g);
/// Distinct centralizers of noncentral elements, sorted canonically.
std::vector<ElementMask> maximal_abelian_subgroups_tc(const FiniteGroup& g);
/// (1 - N)/|G:Z|^s + Σ 1/|G:M_i|^s; the constant 1 for abelian G. NotTCGroup.
DirichletPolynomial tc_series(const FiniteGroup& g);

/// Closed form of P_2(PSL(2,p), s) for a prime p > 3.
DirichletPolynomial psl_series(std::uint64_t p);

}  // namespace nilzeta
