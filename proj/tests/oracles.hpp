#pragma once

// Brute-force reference implementations. Deliberately naive: they only use
// the multiplication table, never the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "nilzeta/group.hpp"
#include "nilzeta/mask.hpp"

namespace oracle {

using nilzeta::Elem;
using nilzeta::ElementMask;
using nilzeta::FiniteGroup;

// Repeatedly multiply everything by everything until nothing new appears.
inline ElementMask closure(const FiniteGroup& g, const ElementMask& seed) {
  ElementMask m = seed;
  m.set(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = m.elements();
    for (Elem a : elems)
      for (Elem b : elems)
        if (m.set(g.mul(a, b))) grew = true;
  }
  return m;
}

inline ElementMask centralizer(const FiniteGroup& g, const ElementMask& s) {
  ElementMask c(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    s.for_each([&](Elem y) { ok = ok && g.mul(x, y) == g.mul(y, x); });
    if (ok) c.set(x);
  }
  return c;
}

inline ElementMask commutator(const FiniteGroup& g, const ElementMask& a, const ElementMask& b) {
  ElementMask seed(g.order());
  a.for_each([&](Elem x) {
    b.for_each([&](Elem y) { seed.set(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))); });
  });
  return oracle::closure(g, seed);
}

// Class of H from the series Γ^{k+1} = [Γ^k, H]; -1 for "not nilpotent".
inline int nil_class(const FiniteGroup& g, const ElementMask& h) {
  if (h.count() == 1) return 0;
  ElementMask cur = h;
  for (int c = 1;; ++c) {
    ElementMask next = oracle::commutator(g, cur, h);
    if (next.count() == 1) return c;
    if (next == cur) return -1;
    cur = next;
  }
}

// Every subgroup: subsets closed under multiplication, found as closures of
// every pair of cyclic subgroups' unions, iterated to a fixpoint.
inline std::vector<ElementMask> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<ElementMask> subs;
  auto add = [&](const ElementMask& m) {
    if (seen.insert(m.words()).second) subs.push_back(m);
  };
  for (Elem x = 0; x < g.order(); ++x) add(oracle::closure(g, ElementMask::singleton(g.order(), x)));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(oracle::closure(g, subs[i] | subs[j]));
  return subs;
}

// Number of s-tuples whose generated subgroup has class < q.
inline std::uint64_t hom_count(const FiniteGroup& g, unsigned q, unsigned s) {
  std::uint64_t count = 0;
  std::vector<Elem> t(s, 0);
  while (true) {
    ElementMask seed(g.order());
    for (Elem x : t) seed.set(x);
    const int c = oracle::nil_class(g, oracle::closure(g, seed));
    if (c >= 0 && c < static_cast<int>(q)) ++count;
    std::size_t k = 0;
    while (k < s && ++t[k] == g.order()) t[k++] = 0;
    if (k == s) break;
  }
  return count;
}

// Orbits of commuting n-tuples under simultaneous conjugation.
inline std::uint64_t commuting_orbits(const FiniteGroup& g, unsigned n) {
  std::set<std::vector<Elem>> reps;
  std::vector<Elem> t(n, 0);
  while (true) {
    bool commuting = true;
    for (unsigned i = 0; i < n && commuting; ++i)
      for (unsigned j = i + 1; j < n && commuting; ++j) commuting = g.commute(t[i], t[j]);
    if (commuting) {
      std::vector<Elem> best = t;
      for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Elem> c(n);
        for (unsigned i = 0; i < n; ++i) c[i] = g.conj(x, t[i]);
        best = std::min(best, c);
      }
      reps.insert(best);
    }
    std::size_t k = 0;
    while (k < n && ++t[k] == g.order()) t[k++] = 0;
    if (k == n) break;
  }
  return reps.size();
}

// Subgroups of Z^s of index r, by listing every Hermite normal form
// (upper triangular, positive diagonal with product r, entries above a
// diagonal entry reduced modulo it) one matrix at a time. Index-r subgroups
// contain rZ^s, so when `check_distinct` is set each matrix is also turned
// into its residue set in (Z/r)^s, which must have r^(s-1) points and differ
// from every other matrix's set.
inline std::uint64_t hnf_count(unsigned r, unsigned s, bool check_distinct = false) {
  std::uint64_t total = 0;
  std::vector<std::vector<unsigned>> m(s, std::vector<unsigned>(s, 0));
  std::set<std::vector<char>> lattices;
  bool distinct = true;

  auto residues = [&]() {
    std::size_t cells = 1;
    for (unsigned i = 0; i < s; ++i) cells *= r;
    std::vector<char> in(cells, 0);
    auto encode = [&](const std::vector<unsigned>& v) {
      std::size_t code = 0;
      for (unsigned x : v) code = code * r + x % r;
      return code;
    };
    std::vector<std::vector<unsigned>> queue{std::vector<unsigned>(s, 0)};
    in[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (unsigned i = 0; i < s; ++i) {
        std::vector<unsigned> v = queue[h];
        for (unsigned j = 0; j < s; ++j) v[j] = (v[j] + m[i][j]) % r;
        const std::size_t c = encode(v);
        if (!in[c]) {
          in[c] = 1;
          queue.push_back(v);
        }
      }
    std::size_t expect = 1;
    for (unsigned i = 1; i < s; ++i) expect *= r;
    if (queue.size() != expect) distinct = false;
    if (!lattices.insert(in).second) distinct = false;
  };

  auto fill = [&](auto&& self, unsigned j, unsigned i) -> void {
    if (j == s) {
      ++total;
      if (check_distinct) residues();
      return;
    }
    if (i == j) {
      self(self, j + 1, 0);
      return;
    }
    for (unsigned a = 0; a < m[j][j]; ++a) {
      m[i][j] = a;
      self(self, j, i + 1);
    }
    m[i][j] = 0;
  };
  auto diag = [&](auto&& self, unsigned i, unsigned rem) -> void {
    if (i == s) {
      if (rem == 1) fill(fill, 0, 0);
      return;
    }
    for (unsigned d = 1; d <= rem; ++d)
      if (rem % d == 0) {
        m[i][i] = d;
        self(self, i + 1, rem / d);
      }
  };
  diag(diag, 0, r);
  if (!distinct) return 0;
  return total;
}

}  // namespace oracle
