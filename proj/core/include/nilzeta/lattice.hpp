#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilzeta/group.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/mask.hpp"

namespace nilzeta {

/// One proper subgroup in a poset N_q(G).
struct SubgroupRecord {
  ElementMask mask;
  std::size_t order = 0;
  NilpotencyClass nil_class = NilpotencyClass::finite(0);
  std::size_t index_in_group = 0;
  bool is_maximal = false;
  bool in_mq = false;
  std::vector<Elem> generators;
};

struct LatticeOptions {
  /// Loud failure above this many records.
  std::size_t record_budget = 200000;
  /// Restrict to subgroups whose elements all lie in this set (e.g. the
  /// p-elements); the set must be closed under taking subgroups of members.
  std::optional<ElementMask> element_filter;
  /// Cross-check the top-down Möbius values against the interval definition.
  bool cross_check_mobius = true;
};

/// The poset L_q(G) = N_q(G) ∪ {G}. Records hold the proper members; the top
/// element G is implicit. Record order is canonical: by order, then by mask.
class NilpotentPoset {
 public:
  NilpotentPoset() = default;

  const FiniteGroup& group() const noexcept { return group_; }
  unsigned q() const noexcept { return q_; }
  const std::vector<SubgroupRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  /// True when G itself has class < q (so the family contains G and the
  /// poset convention does not apply).
  bool top_in_family() const noexcept { return top_in_family_; }

  /// Records strictly containing record i.
  const ElementMask& strictly_above(std::size_t i) const { return above_[i]; }
  /// Records strictly contained in record i.
  const ElementMask& strictly_below(std::size_t i) const { return below_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || above_[i].test(static_cast<Elem>(j)); }

  std::optional<std::size_t> find(const ElementMask& mask) const;

  /// Records directly below record j in the cover relation (or below the top
  /// when j == size()).
  std::vector<std::pair<std::size_t, std::size_t>> cover_relation() const;

  bool has_mq() const noexcept { return has_mq_; }
  bool has_mobius() const noexcept { return !mobius_.empty() || records_.empty(); }
  /// μ_q(H, G) per record.
  const std::vector<std::int64_t>& mobius_to_top() const noexcept { return mobius_; }

 private:
  friend NilpotentPoset enumerate_nq(const FiniteGroup&, unsigned, const LatticeOptions&);
  friend void maximal_closure(NilpotentPoset&);
  friend const std::vector<std::int64_t>& mobius(NilpotentPoset&, bool);

  FiniteGroup group_;
  unsigned q_ = 2;
  bool top_in_family_ = false;
  bool has_mq_ = false;
  std::vector<SubgroupRecord> records_;
  std::vector<ElementMask> above_;
  std::vector<ElementMask> below_;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> index_;
  std::vector<std::int64_t> mobius_;
};

/// Proper subgroups of class < q, the trivial subgroup included, with
/// containment and maximality. Throws OrderCapExceeded past the budget.
NilpotentPoset enumerate_nq(const FiniteGroup& g, unsigned q, const LatticeOptions& options = {});

/// Flags in_mq on the records that are intersections of maximal records.
void maximal_closure(NilpotentPoset& poset);

/// Computes μ_q(H, G) top-down (μ(H,G) = -Σ_{H<K≤G} μ(K,G)); when
/// `cross_check` is set, recomputes every value from the interval definition
/// μ(H,u) = -Σ_{H≤v<u} μ(H,v) and throws on disagreement.
const std::vector<std::int64_t>& mobius(NilpotentPoset& poset, bool cross_check = true);

/// enumerate_nq + maximal_closure + mobius.
NilpotentPoset build_lattice(const FiniteGroup& g, unsigned q, const LatticeOptions& options = {});

/// Reference enumeration: every subgroup of G, reached by adding arbitrary
/// elements one at a time without pruning. Only for small groups.
std::vector<ElementMask> all_subgroups(const FiniteGroup& g, std::size_t budget = 200000);

}  // namespace nilzeta
