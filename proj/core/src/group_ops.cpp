#include "nilzeta/group_ops.hpp"

#include <algorithm>

#include "nilzeta/error.hpp"

namespace nilzeta {

unsigned NilpotencyClass::value() const {
  if (!finite_) throw Error(ErrorKind::BadInput, "nilpotency class is infinite");
  return value_;
}

ElementMask extend_subgroup(const FiniteGroup& g, const ElementMask& h, std::span<const Elem> h_gens,
                            Elem x) {
  if (h.test(x)) return h;
  const std::vector<Elem> h_elems = h.elements();
  std::vector<Elem> gens(h_gens.begin(), h_gens.end());
  gens.push_back(x);

  ElementMask result = h;
  std::vector<Elem> reps{FiniteGroup::identity};
  auto add_coset = [&](Elem r) {
    for (Elem e : h_elems) result.set(g.mul(e, r));
    reps.push_back(r);
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      const Elem e = g.mul(reps[i], s);
      if (!result.test(e)) add_coset(e);
    }
  }
  return result;
}

ElementMask closure(const FiniteGroup& g, std::span<const Elem> generators) {
  ElementMask h = g.trivial_mask();
  std::vector<Elem> gens;
  for (Elem x : generators) {
    if (h.test(x)) continue;
    h = extend_subgroup(g, h, gens, x);
    gens.push_back(x);
  }
  return h;
}

ElementMask closure(const FiniteGroup& g, const ElementMask& seed) {
  const std::vector<Elem> gens = seed.elements();
  return closure(g, gens);
}

std::vector<Elem> generators_of(const FiniteGroup& g, const ElementMask& h) {
  std::vector<Elem> gens;
  ElementMask cur = g.trivial_mask();
  h.for_each([&](Elem e) {
    if (cur.count() == h.count() || cur.test(e)) return;
    cur = extend_subgroup(g, cur, gens, e);
    gens.push_back(e);
  });
  return gens;
}

bool is_subgroup(const FiniteGroup& g, const ElementMask& h) {
  if (!h.test(FiniteGroup::identity)) return false;
  const std::vector<Elem> elems = h.elements();
  for (Elem a : elems) {
    if (!h.test(g.inv(a))) return false;
    for (Elem b : elems)
      if (!h.test(g.mul(a, b))) return false;
  }
  return true;
}

ElementMask centralizer_of(const FiniteGroup& g, std::span<const Elem> elems) {
  ElementMask c(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : elems)
      if (!g.commute(x, s)) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return c;
}

ElementMask centralizer(const FiniteGroup& g, const ElementMask& s) {
  const std::vector<Elem> elems = s.elements();
  return centralizer_of(g, elems);
}

ElementMask center(const FiniteGroup& g) {
  const std::vector<Elem> gens = generators_of(g, g.full_mask());
  return centralizer_of(g, gens);
}

ElementMask normalizer(const FiniteGroup& g, std::span<const Elem> h_gens, const ElementMask& h) {
  ElementMask n(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : h_gens)
      if (!h.test(g.conj(x, s))) {
        ok = false;
        break;
      }
    if (ok) n.set(x);
  }
  return n;
}

ElementMask normal_closure(const FiniteGroup& g, std::span<const Elem> seeds, std::span<const Elem> ambient_gens) {
  ElementMask n = g.trivial_mask();
  std::vector<Elem> gens;
  auto add = [&](Elem x) {
    if (n.test(x)) return;
    n = extend_subgroup(g, n, gens, x);
    gens.push_back(x);
  };
  for (Elem x : seeds) add(x);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem z : ambient_gens) add(g.conj(z, gens[i]));
  return n;
}

namespace {

// [<X>, <Y>] is the normal closure of {[x, y]} in <X, Y>.
ElementMask commutator_from_gens(const FiniteGroup& g, std::span<const Elem> xs, std::span<const Elem> ys,
                                 std::span<const Elem> ambient) {
  std::vector<Elem> seeds;
  for (Elem x : xs)
    for (Elem y : ys) {
      const Elem c = g.commutator(x, y);
      if (c != FiniteGroup::identity) seeds.push_back(c);
    }
  return normal_closure(g, seeds, ambient);
}

}  // namespace

ElementMask commutator_subgroup(const FiniteGroup& g, const ElementMask& a, const ElementMask& b) {
  const std::vector<Elem> xs = generators_of(g, a);
  const std::vector<Elem> ys = generators_of(g, b);
  std::vector<Elem> ambient = xs;
  ambient.insert(ambient.end(), ys.begin(), ys.end());
  return commutator_from_gens(g, xs, ys, ambient);
}

std::vector<ElementMask> lower_central_series(const FiniteGroup& g, const ElementMask& h,
                                              unsigned max_terms) {
  const std::vector<Elem> hg = generators_of(g, h);
  std::vector<ElementMask> series{h};
  std::vector<Elem> term_gens = hg;
  while (series.size() < max_terms) {
    const ElementMask& last = series.back();
    if (last.count() == 1) break;
    ElementMask next = commutator_from_gens(g, term_gens, hg, hg);
    if (next == last) break;
    term_gens = generators_of(g, next);
    series.push_back(std::move(next));
  }
  return series;
}

NilpotencyClass nilpotency_class(const FiniteGroup& g, const ElementMask& h) {
  if (h.count() <= 1) return NilpotencyClass::finite(0);
  const std::vector<ElementMask> series = lower_central_series(g, h, ~0u);
  if (series.back().count() != 1) return NilpotencyClass::infinite();
  return NilpotencyClass::finite(static_cast<unsigned>(series.size() - 1));
}

NilpotencyClass nilpotency_class(const FiniteGroup& g) { return nilpotency_class(g, g.full_mask()); }

bool class_below(const FiniteGroup& g, const ElementMask& h, unsigned q) {
  if (h.count() <= 1) return true;
  if (q <= 1) return false;
  // Γ^q(H) is the q-th term; the series has at most q terms before deciding.
  const std::vector<ElementMask> series = lower_central_series(g, h, q);
  return series.back().count() == 1;
}

bool is_normal(const FiniteGroup& g, const ElementMask& n) {
  const std::vector<Elem> n_gens = generators_of(g, n);
  const std::vector<Elem> g_gens = generators_of(g, g.full_mask());
  for (Elem x : g_gens)
    for (Elem s : n_gens)
      if (!n.test(g.conj(x, s))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const ElementMask& h) {
  const std::vector<Elem> gens = generators_of(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) { return is_abelian(g, g.full_mask()); }

ElementMask conjugate(const FiniteGroup& g, Elem x, const ElementMask& h) {
  ElementMask out(g.order());
  h.for_each([&](Elem e) { out.set(g.conj(x, e)); });
  return out;
}

CosetPartition left_cosets(const FiniteGroup& g, const ElementMask& h) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  CosetPartition p;
  p.coset_of.assign(g.order(), kUnset);
  const std::vector<Elem> h_elems = h.elements();
  for (Elem x = 0; x < g.order(); ++x) {
    if (p.coset_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(p.reps.size());
    p.reps.push_back(x);
    for (Elem e : h_elems) p.coset_of[g.mul(x, e)] = id;
  }
  return p;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

ElementMask p_elements(const FiniteGroup& g, std::uint64_t p) {
  ElementMask m(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const std::uint64_t o = g.element_order(x);
    if (p_part(o, p) == o) m.set(x);
  }
  return m;
}

}  // namespace nilzeta
