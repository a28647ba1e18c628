#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilzeta/group.hpp"
#include "nilzeta/mask.hpp"

namespace nilzeta {

/// Nilpotency class, with "not nilpotent" as a distinguished value.
class NilpotencyClass {
 public:
  static NilpotencyClass finite(unsigned c) { return NilpotencyClass(true, c); }
  static NilpotencyClass infinite() { return NilpotencyClass(false, 0); }

  bool is_finite() const noexcept { return finite_; }
  /// Throws when infinite.
  unsigned value() const;
  /// class < q, i.e. Γ^q = 1. Never true for the infinite class.
  bool below(unsigned q) const noexcept { return finite_ && value_ < q; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

  bool operator==(const NilpotencyClass&) const = default;

 private:
  NilpotencyClass(bool finite, unsigned c) : finite_(finite), value_(c) {}
  bool finite_;
  unsigned value_;
};

/// Smallest subgroup containing `seed` (and the identity).
ElementMask closure(const FiniteGroup& g, const ElementMask& seed);
ElementMask closure(const FiniteGroup& g, std::span<const Elem> generators);

/// <H, x> for a subgroup H generated by `h_gens` (Dimino's coset extension).
ElementMask extend_subgroup(const FiniteGroup& g, const ElementMask& h, std::span<const Elem> h_gens,
                            Elem x);

/// A small generating set of the subgroup `h`, chosen greedily in index order.
std::vector<Elem> generators_of(const FiniteGroup& g, const ElementMask& h);

bool is_subgroup(const FiniteGroup& g, const ElementMask& h);

ElementMask centralizer(const FiniteGroup& g, const ElementMask& s);
ElementMask centralizer_of(const FiniteGroup& g, std::span<const Elem> elems);
ElementMask center(const FiniteGroup& g);
ElementMask normalizer(const FiniteGroup& g, std::span<const Elem> h_gens, const ElementMask& h);

/// Smallest normal subgroup of <ambient_gens> containing `seeds`.
ElementMask normal_closure(const FiniteGroup& g, std::span<const Elem> seeds, std::span<const Elem> ambient_gens);

/// [A, B], generated by a^-1 b^-1 a b.
ElementMask commutator_subgroup(const FiniteGroup& g, const ElementMask& a, const ElementMask& b);

/// Γ^1(H) = H, Γ^{k+1}(H) = [Γ^k(H), H], stopping once the series stabilizes
/// or after `max_terms` terms.
std::vector<ElementMask> lower_central_series(const FiniteGroup& g, const ElementMask& h,
                                              unsigned max_terms = 64);

NilpotencyClass nilpotency_class(const FiniteGroup& g, const ElementMask& h);
NilpotencyClass nilpotency_class(const FiniteGroup& g);

/// Γ^q(H) = 1, evaluated with early exit.
bool class_below(const FiniteGroup& g, const ElementMask& h, unsigned q);

bool is_normal(const FiniteGroup& g, const ElementMask& n);
bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const ElementMask& h);

ElementMask conjugate(const FiniteGroup& g, Elem x, const ElementMask& h);

/// Left cosets xH. `coset_of[x]` is the coset id of x; `reps[id]` is the least
/// element of that coset. Ids are ordered by representative.
struct CosetPartition {
  std::vector<std::uint32_t> coset_of;
  std::vector<Elem> reps;
};
CosetPartition left_cosets(const FiniteGroup& g, const ElementMask& h);

/// Elements whose order is a power of p (the identity included).
ElementMask p_elements(const FiniteGroup& g, std::uint64_t p);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);

}  // namespace nilzeta
