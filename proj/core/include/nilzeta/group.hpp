#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nilzeta/mask.hpp"

namespace nilzeta {

/// Multiplication for groups too large to keep a Cayley table for.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
};

/// A finite group on the element indices 0..order-1, identity fixed at 0.
///
/// Groups up to kTableLimit elements carry a full Cayley table; larger ones
/// delegate to a Multiplier (permutation composition or component-wise
/// products). Immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  static constexpr Elem identity = 0;
  static constexpr std::size_t kTableLimit = 4096;

  FiniteGroup() = default;

  /// Table-backed group. `table[a * order + b]` is the product ab.
  FiniteGroup(std::string name, std::size_t order, std::vector<std::uint16_t> table,
              std::vector<std::string> labels);

  /// Backend-backed group.
  FiniteGroup(std::string name, std::size_t order, std::shared_ptr<const Multiplier> backend,
              std::vector<std::string> labels);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  bool table_backed() const noexcept { return tab_ != nullptr || order_ == 1; }

  Elem mul(Elem a, Elem b) const {
    if (tab_) return tab_[static_cast<std::size_t>(a) * order_ + b];
    if (order_ == 1) return 0;
    return backend_->mul(a, b);
  }
  Elem inv(Elem a) const { return (*inverse_)[a]; }

  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem g, std::uint64_t k) const;
  std::size_t element_order(Elem g) const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::string& label(Elem e) const { return (*labels_)[e]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  ElementMask empty_mask() const { return ElementMask(order_); }
  ElementMask full_mask() const { return ElementMask::full(order_); }
  ElementMask trivial_mask() const { return ElementMask::singleton(order_, identity); }

 private:
  std::string name_;
  std::size_t order_ = 0;
  // Copies share the (immutable) table, inverses and labels.
  std::shared_ptr<const std::vector<std::uint16_t>> table_;
  const std::uint16_t* tab_ = nullptr;
  std::shared_ptr<const Multiplier> backend_;
  std::shared_ptr<const std::vector<Elem>> inverse_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Checks identity, inverse, Latin-square and associativity laws.
/// Associativity is exhaustive up to `exhaustive_limit` elements and sampled
/// on `random_triples` triples above it. Returns an empty string on success,
/// otherwise a description of the first violation.
std::string check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 256,
                               std::size_t random_triples = 100000);

}  // namespace nilzeta
