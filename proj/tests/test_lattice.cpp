#include "doctest.h"
#include "oracles.hpp"

#include <map>

#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/lattice.hpp"

using namespace nilzeta;

namespace {

std::map<std::size_t, std::int64_t> mobius_by_order(const NilpotentPoset& p) {
  std::map<std::size_t, std::int64_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t mu = p.mobius_to_top()[i];
    if (mu == 0) continue;
    auto [it, fresh] = out.emplace(p.records()[i].order, mu);
    if (!fresh) CHECK(it->second == mu);
  }
  return out;
}

}  // namespace

TEST_CASE("S3 abelian poset") {
  const NilpotentPoset p = build_lattice(symmetric(3), 2);
  REQUIRE(p.size() == 5);
  CHECK(p.records()[0].order == 1);
  CHECK(!p.top_in_family());
  std::size_t maximal = 0;
  for (const auto& r : p.records()) {
    maximal += r.is_maximal;
    CHECK(r.in_mq);
    CHECK(r.order * r.index_in_group == 6);
  }
  CHECK(maximal == 4);
  CHECK(p.mobius_to_top()[0] == 3);
  for (std::size_t i = 1; i < 5; ++i) CHECK(p.mobius_to_top()[i] == -1);
}

TEST_CASE("small and degenerate posets") {
  const NilpotentPoset cp = build_lattice(cyclic(7), 2);
  REQUIRE(cp.size() == 1);
  CHECK(cp.top_in_family());
  CHECK(cp.records()[0].is_maximal);

  // unique maximal member: C4 in C8, q = 2 is abelian so the family holds the top
  const NilpotentPoset c8 = build_lattice(cyclic(8), 2);
  CHECK(c8.size() == 3);
  std::size_t in_mq = 0;
  for (const auto& r : c8.records()) in_mq += r.in_mq;
  CHECK(in_mq == 1);

  CHECK_THROWS_AS(enumerate_nq(symmetric(3), 1), Error);
  LatticeOptions tiny;
  tiny.record_budget = 10;
  try {
    enumerate_nq(make_group("A5"), 2, tiny);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("extraspecial Möbius table") {
  const NilpotentPoset p = build_lattice(extraspecial32(), 2);
  const auto mu = mobius_by_order(p);
  CHECK(mu.at(8) == -1);
  CHECK(mu.at(4) == 2);
  CHECK(mu.at(2) == -16);
  CHECK(mu.size() == 3);
  std::map<std::size_t, int> nonzero;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.mobius_to_top()[i] != 0) ++nonzero[p.records()[i].order];
  CHECK(nonzero[8] == 15);
  CHECK(nonzero[4] == 15);
  CHECK(nonzero[2] == 1);
}

TEST_CASE("TC group M_2 is maximal abelians and the center") {
  for (const std::string spec : {"S3", "A4", "D8", "D16", "Q8xC3"}) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    const NilpotentPoset p = build_lattice(g, 2);
    const ElementMask z = center(g);
    for (const auto& r : p.records()) CHECK(r.in_mq == (r.is_maximal || r.mask == z));
  }
}

TEST_CASE("enumeration matches the naive oracle") {
  for (const std::string spec : {"S3", "D8", "D12", "D16", "D20", "D24", "Q8", "A4", "S4", "ES32", "SL(2,3)",
                           "A5", "S3xC2", "S3xS3", "D8xC3", "C2xC2xC2", "Q8xC2", "D32", "C6xC6", "A4xC3"}) {
    const FiniteGroup g = make_group(spec);
    if (g.order() > 60) continue;
    const auto subs = oracle::all_subgroups(g);
    for (unsigned q : {2u, 3u, 4u}) {
      CAPTURE(spec);
      CAPTURE(q);
      std::vector<ElementMask> expected;
      for (const auto& h : subs) {
        const int c = oracle::nil_class(g, h);
        if (h.count() < g.order() && c >= 0 && c < static_cast<int>(q)) expected.push_back(h);
      }
      const NilpotentPoset p = enumerate_nq(g, q);
      CHECK(p.size() == expected.size());
      for (const auto& h : expected) CHECK(p.find(h).has_value());
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& r = p.records()[i];
        CHECK(r.nil_class.below(q));
        CHECK(r.order * r.index_in_group == g.order());
        bool maximal = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
          const bool contained = i != j && r.mask.is_subset_of(p.records()[j].mask);
          CHECK(contained == p.strictly_above(i).test(static_cast<Elem>(j)));
          if (contained) maximal = false;
        }
        CHECK(r.is_maximal == maximal);
        if (i > 0) {
          const auto& prev = p.records()[i - 1];
          CHECK((prev.order < r.order || (prev.order == r.order && ElementMask::lex_less(prev.mask, r.mask))));
        }
      }
    }
  }
}

TEST_CASE("all_subgroups agrees with the oracle") {
  for (const std::string spec : {"S4", "ES32", "D24"}) {
    const FiniteGroup g = make_group(spec);
    CHECK(all_subgroups(g).size() == oracle::all_subgroups(g).size());
  }
  CHECK(all_subgroups(symmetric(4)).size() == 30);
}

TEST_CASE("p-element filter gives abelian p-subgroups") {
  const FiniteGroup s4 = symmetric(4);
  LatticeOptions opts;
  opts.element_filter = p_elements(s4, 2);
  const NilpotentPoset p = enumerate_nq(s4, 2, opts);
  for (const auto& r : p.records()) CHECK((r.order & (r.order - 1)) == 0);
  // 1, nine C2, three C4, four V4 (one normal, three not)
  CHECK(p.size() == 1 + 9 + 3 + 4);
}

TEST_CASE("Möbius properties on the corpus") {
  for (const std::string spec : {"S3", "D8", "D16", "D32", "Q8", "A4", "S4", "A5", "SL(2,4)", "PSL(2,7)", "ES32",
                           "SL(2,3)", "D8xC3", "S3xS3"}) {
    const FiniteGroup g = make_group(spec);
    for (unsigned q : {2u, 3u}) {
      CAPTURE(spec);
      CAPTURE(q);
      NilpotentPoset p = enumerate_nq(g, q);
      maximal_closure(p);
      // throws if the two recursions disagree
      const auto& mu = mobius(p, true);
      std::int64_t total = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        total += mu[i];
        // Hall vanishing
        if (!p.records()[i].in_mq) CHECK(mu[i] == 0);
      }
      if (!p.top_in_family()) CHECK(total == 0);
      // inner automorphisms permute records and preserve μ
      for (Elem x = 1; x < g.order(); x += 1 + g.order() / 7) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          const auto j = p.find(conjugate(g, x, p.records()[i].mask));
          REQUIRE(j.has_value());
          CHECK(mu[*j] == mu[i]);
          CHECK(p.records()[*j].in_mq == p.records()[i].in_mq);
        }
      }
    }
  }
}

TEST_CASE("cover relation") {
  const NilpotentPoset p = build_lattice(symmetric(3), 2);
  const auto covers = p.cover_relation();
  // trivial under each of the four cyclics, each cyclic under the top
  CHECK(covers.size() == 8);
  const NilpotentPoset d8 = build_lattice(dihedral(8), 2);
  for (auto [a, b] : d8.cover_relation()) {
    const std::size_t top = b == d8.size() ? 8 : d8.records()[b].order;
    CHECK(top == 2 * d8.records()[a].order);
  }
}
