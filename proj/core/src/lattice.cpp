#include "nilzeta/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "nilzeta/error.hpp"

namespace nilzeta {
namespace {

ElementMask cyclic_subgroup(const FiniteGroup& g, Elem x) {
  ElementMask m = g.trivial_mask();
  for (Elem y = x; y != FiniteGroup::identity; y = g.mul(y, x)) m.set(y);
  return m;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::BudgetExceeded, "Möbius value overflow");
  return r;
}

class CentralizerCache {
 public:
  explicit CentralizerCache(const FiniteGroup& g) : g_(g) {}

  const ElementMask& of(Elem x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    const Elem one[] = {x};
    return cache_.emplace(x, centralizer_of(g_, one)).first->second;
  }

 private:
  const FiniteGroup& g_;
  std::unordered_map<Elem, ElementMask> cache_;
};

}  // namespace

std::optional<std::size_t> NilpotentPoset::find(const ElementMask& mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> NilpotentPoset::cover_relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = records_.size();
  for (std::size_t i = 0; i < n; ++i) {
    ElementMask direct = above_[i];
    above_[i].for_each([&](Elem j) {
      if (direct.test(j)) {
        const ElementMask& higher = above_[j];
        higher.for_each([&](Elem k) { direct.reset(k); });
      }
    });
    direct.for_each([&](Elem j) { covers.emplace_back(i, j); });
    if (records_[i].is_maximal) covers.emplace_back(i, n);
  }
  return covers;
}

NilpotentPoset enumerate_nq(const FiniteGroup& g, unsigned q, const LatticeOptions& options) {
  if (q < 2) throw Error(ErrorKind::BadInput, "class bound q must be at least 2");
  NilpotentPoset poset;
  poset.group_ = g;
  poset.q_ = q;
  const std::size_t n = g.order();
  const ElementMask full = g.full_mask();
  const bool filtered = options.element_filter.has_value();
  const ElementMask allowed = filtered ? *options.element_filter : full;

  poset.top_in_family_ = (q == 2 ? is_abelian(g) : class_below(g, full, q)) && allowed.count() == n;

  std::vector<SubgroupRecord> found;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> index;
  std::unordered_set<ElementMask, ElementMaskHash> rejected;

  auto admit = [&](ElementMask mask, std::vector<Elem> gens, bool known_good) {
    if (mask.count() == n) return;
    if (index.count(mask) || rejected.count(mask)) return;
    if (!known_good) {
      if (filtered && !mask.is_subset_of(allowed)) {
        rejected.insert(std::move(mask));
        return;
      }
      if (!class_below(g, mask, q)) {
        rejected.insert(std::move(mask));
        return;
      }
    }
    if (found.size() >= options.record_budget)
      throw Error(ErrorKind::OrderCapExceeded,
                  "subgroup budget of " + std::to_string(options.record_budget) + " records exceeded for " + g.name());
    SubgroupRecord rec;
    rec.order = mask.count();
    rec.generators = std::move(gens);
    index.emplace(mask, found.size());
    rec.mask = std::move(mask);
    found.push_back(std::move(rec));
  };

  // cyclic seeds
  std::vector<char> seeded(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (!allowed.test(x) || seeded[x]) continue;
    ElementMask c = cyclic_subgroup(g, x);
    // every generator of <x> gives the same subgroup
    const std::size_t ord = c.count();
    for (std::size_t k = 1; k <= ord; ++k)
      if (std::gcd(k, ord) == 1) seeded[g.power(x, k)] = 1;
    std::vector<Elem> gens;
    if (x != FiniteGroup::identity) gens.push_back(x);
    admit(std::move(c), std::move(gens), true);
  }

  CentralizerCache centralizers(g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementMask h = found[i].mask;
    const std::vector<Elem> gens = found[i].generators;
    // abelian overgroups lie in C(H); nilpotent ones are reached through N(H)
    ElementMask candidates = full;
    if (q == 2) {
      for (Elem s : gens) candidates = candidates & centralizers.of(s);
    } else {
      candidates = normalizer(g, gens, h);
    }
    if (filtered) candidates = candidates & allowed;
    ElementMask covered = h;
    const std::vector<Elem> h_elems = h.elements();
    candidates.for_each([&](Elem x) {
      if (covered.test(x)) return;
      for (Elem e : h_elems) covered.set(g.mul(x, e));
      ElementMask k = extend_subgroup(g, h, gens, x);
      if (k.count() == n || index.count(k) || rejected.count(k)) return;
      std::vector<Elem> k_gens = gens;
      k_gens.push_back(x);
      admit(std::move(k), std::move(k_gens), q == 2 && !filtered);
    });
  }

  // canonical order: by order, then mask
  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return ElementMask::lex_less(found[a].mask, found[b].mask);
  });
  poset.records_.reserve(found.size());
  for (std::size_t i : perm) poset.records_.push_back(std::move(found[i]));

  const std::size_t m = poset.records_.size();
  for (std::size_t i = 0; i < m; ++i) {
    SubgroupRecord& r = poset.records_[i];
    r.index_in_group = n / r.order;
    r.nil_class = q == 2 ? NilpotencyClass::finite(r.order > 1 ? 1 : 0) : nilpotency_class(g, r.mask);
    poset.index_.emplace(r.mask, i);
  }

  poset.above_.assign(m, ElementMask(m));
  poset.below_.assign(m, ElementMask(m));
  for (std::size_t i = 0; i < m; ++i) {
    const SubgroupRecord& a = poset.records_[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const SubgroupRecord& b = poset.records_[j];
      if (b.order <= a.order || b.order % a.order != 0) continue;
      if (a.mask.is_subset_of(b.mask)) {
        poset.above_[i].set(static_cast<Elem>(j));
        poset.below_[j].set(static_cast<Elem>(i));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) poset.records_[i].is_maximal = poset.above_[i].empty();
  return poset;
}

void maximal_closure(NilpotentPoset& poset) {
  auto& records = poset.records_;
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].in_mq = false;
    if (records[i].is_maximal) maximal.push_back(i);
  }
  std::vector<std::size_t> queue = maximal;
  for (std::size_t i : maximal) records[i].in_mq = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t mx : maximal) {
      if (mx == x) continue;
      const ElementMask meet = records[x].mask & records[mx].mask;
      const auto id = poset.find(meet);
      if (!id) throw Error(ErrorKind::BadInput, "intersection of members is missing from the poset");
      if (!records[*id].in_mq) {
        records[*id].in_mq = true;
        queue.push_back(*id);
      }
    }
  }
  poset.has_mq_ = true;
}

const std::vector<std::int64_t>& mobius(NilpotentPoset& poset, bool cross_check) {
  const std::size_t m = poset.records_.size();
  std::vector<std::int64_t> mu(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    std::int64_t sum = 1;  // μ(G, G)
    poset.above_[i].for_each([&](Elem j) { sum = checked_add(sum, mu[j]); });
    mu[i] = -sum;
  }

  if (cross_check) {
    // Interval definition: for each H, μ(H,H) = 1 and μ(H,u) = -Σ_{H≤v<u} μ(H,v)
    // over u ascending, ending at the top.
    std::vector<std::int64_t> local(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const ElementMask& interval = poset.above_[i];
      local[i] = 1;
      std::int64_t top_sum = 1;
      interval.for_each([&](Elem u) {
        std::int64_t s = local[i];
        const ElementMask between = interval & poset.below_[u];
        between.for_each([&](Elem v) { s = checked_add(s, local[v]); });
        local[u] = -s;
        top_sum = checked_add(top_sum, local[u]);
      });
      const std::int64_t bottom_up = -top_sum;
      if (bottom_up != mu[i])
        throw Error(ErrorKind::BadInput, "Möbius recursions disagree at record " + std::to_string(i));
    }
  }
  poset.mobius_ = std::move(mu);
  return poset.mobius_;
}

NilpotentPoset build_lattice(const FiniteGroup& g, unsigned q, const LatticeOptions& options) {
  NilpotentPoset poset = enumerate_nq(g, q, options);
  maximal_closure(poset);
  mobius(poset, options.cross_check_mobius);
  return poset;
}

std::vector<ElementMask> all_subgroups(const FiniteGroup& g, std::size_t budget) {
  std::vector<ElementMask> subs{g.trivial_mask()};
  std::vector<std::vector<Elem>> gens{{}};
  std::unordered_set<ElementMask, ElementMaskHash> seen{subs[0]};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (subs[i].test(x)) continue;
      ElementMask k = extend_subgroup(g, subs[i], gens[i], x);
      if (seen.insert(k).second) {
        if (subs.size() >= budget) throw Error(ErrorKind::BudgetExceeded, "subgroup budget exceeded");
        auto kg = gens[i];
        kg.push_back(x);
        subs.push_back(std::move(k));
        gens.push_back(std::move(kg));
      }
    }
  }
  return subs;
}

}  // namespace nilzeta
