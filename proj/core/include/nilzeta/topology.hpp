#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "nilzeta/group.hpp"
#include "nilzeta/lattice.hpp"

namespace nilzeta {

inline constexpr std::size_t kDefaultSimplexBudget = 5000000;

/// χ(E(q,G)) by three routes.
struct EulerRoutes {
  mpz_class series;      // P_q(G, -1)
  mpz_class lattice;     // 1 - Σ_{L_q(G)} μ_q(H,G) |G:H|
  mpz_class crosscut;    // -Σ_{M_q(G)} μ(H,G) |G:H|, μ taken in M_q(G) ∪ {G}
};

/// Throws GroupIsNilpotentOfSmallClass when class(G) < q.
EulerRoutes euler_routes(const FiniteGroup& g, unsigned q);
/// The common value; throws std::logic_error if the routes disagree.
mpz_class euler_characteristic(const FiniteGroup& g, unsigned q);

struct CosetVertex {
  std::size_t record;   // index into the poset
  Elem rep;             // least element of the coset
};

/// Order complex of the proper cosets xH, H ∈ M_q(G), under inclusion.
class CosetComplex {
 public:
  const std::vector<CosetVertex>& vertices() const noexcept { return vertices_; }
  /// simplices()[d] holds the d-simplices as increasing vertex lists.
  const std::vector<std::vector<std::vector<std::uint32_t>>>& simplices() const noexcept { return simplices_; }
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t simplex_count() const;
  /// Σ (-1)^d |simplices_d|.
  mpz_class euler_characteristic() const;
  const NilpotentPoset& poset() const noexcept { return poset_; }

  nlohmann::json to_json() const;

 private:
  friend CosetComplex build_coset_complex(const FiniteGroup&, unsigned, std::size_t);
  NilpotentPoset poset_;
  std::vector<CosetVertex> vertices_;
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices_;
};

/// Vertices are ordered by (record, rep), records ascending in canonical
/// order, so every chain is increasing in vertex index. Throws
/// GroupIsNilpotentOfSmallClass or BudgetExceeded.
CosetComplex build_coset_complex(const FiniteGroup& g, unsigned q, std::size_t budget = kDefaultSimplexBudget);

/// Sparse integer matrix stored by columns.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> cols;
};

/// Boundary map from d-simplices to (d-1)-simplices (d >= 1).
SparseIntMatrix boundary_matrix(const CosetComplex& c, int d);

/// Nonzero invariant factors of the Smith normal form, ascending (each divides
/// the next). Unit pivots are eliminated sparsely, the rest densely.
std::vector<mpz_class> smith_invariants(const SparseIntMatrix& m);
/// Same result from a dense elimination over the whole matrix.
std::vector<mpz_class> smith_invariants_dense(const SparseIntMatrix& m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1
};

struct HomologySummary {
  std::vector<HomologyGroup> groups;  // by dimension
  /// e.g. "H_0 = Z, H_1 = Z/2, H_2 = Z^75"
  std::string to_string() const;
  nlohmann::json to_json() const;
  /// Σ (-1)^d betti_d
  mpz_class euler_characteristic() const;
};

HomologySummary homology(const CosetComplex& c);

/// Connected components of the vertex/edge graph.
std::size_t component_count(const CosetComplex& c);

struct DivisibilityReport {
  mpz_class m_q;      // gcd of |G:H| over maximal H ∈ N_q(G)
  mpz_class chi;
  bool divides = false;
};
DivisibilityReport divisibility_check(const FiniteGroup& g, unsigned q);

}  // namespace nilzeta
