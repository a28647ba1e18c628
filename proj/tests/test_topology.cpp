#include "doctest.h"
#include "oracles.hpp"

#include <map>
#include <random>
#include <set>

#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/topology.hpp"

using namespace nilzeta;

namespace {

std::vector<std::size_t> f_vector(const CosetComplex& c) {
  std::vector<std::size_t> f;
  for (const auto& s : c.simplices()) f.push_back(s.size());
  return f;
}

// Every proper coset xH for H in M_q and the inclusion relation, straight
// from element sets.
std::size_t naive_edge_count(const CosetComplex& c) {
  const FiniteGroup& g = c.poset().group();
  std::vector<std::set<Elem>> sets;
  for (const auto& v : c.vertices()) {
    std::set<Elem> s;
    c.poset().records()[v.record].mask.for_each([&](Elem h) { s.insert(g.mul(v.rep, h)); });
    sets.push_back(std::move(s));
  }
  std::size_t edges = 0;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (a != b && sets[a].size() < sets[b].size() &&
          std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end()))
        ++edges;
  return edges;
}

}  // namespace

TEST_CASE("Euler characteristic routes") {
  CHECK(euler_characteristic(extraspecial32(), 2) == 76);
  CHECK(euler_characteristic(make_group("SL(2,4)"), 2) == -853);
  CHECK(euler_characteristic(symmetric(3), 2) == -7);
  for (const std::string spec : {"S3", "D8", "Q8", "A4", "D16", "S4", "SL(2,3)", "A5", "ES32", "PSL(2,7)", "S5", "S3xS3"}) {
    const FiniteGroup g = make_group(spec);
    for (unsigned q = 2; q <= 3; ++q) {
      if (class_below(g, g.full_mask(), q)) {
        CHECK_THROWS_AS(euler_routes(g, q), Error);
        continue;
      }
      CAPTURE(spec);
      CAPTURE(q);
      const EulerRoutes r = euler_routes(g, q);
      CHECK(r.series == r.lattice);
      CHECK(r.series == r.crosscut);
    }
  }
  try {
    euler_characteristic(cyclic(4), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupIsNilpotentOfSmallClass);
  }
}

TEST_CASE("coset complex shape") {
  const CosetComplex s3 = build_coset_complex(symmetric(3), 2);
  CHECK(s3.vertices().size() == 17);
  CHECK(f_vector(s3) == std::vector<std::size_t>{17, 24});
  CHECK(build_coset_complex(extraspecial32(), 2).vertices().size() == 196);

  for (const std::string spec : {"S3", "D8", "Q8", "A4", "S4", "ES32", "D16", "A5"}) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    const CosetComplex c = build_coset_complex(g, 2);
    std::size_t expect = 0;
    for (const auto& r : c.poset().records())
      if (r.in_mq) expect += r.index_in_group;
    CHECK(c.vertices().size() == expect);
    CHECK(c.euler_characteristic() == euler_characteristic(g, 2));
    CHECK(c.simplices()[1].size() == naive_edge_count(c));
    // closed under faces, chains strictly increasing
    for (int d = 1; d <= c.dimension(); ++d) {
      const std::set<std::vector<std::uint32_t>> lower(c.simplices()[d - 1].begin(), c.simplices()[d - 1].end());
      for (const auto& s : c.simplices()[d]) {
        CHECK(std::is_sorted(s.begin(), s.end()));
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          CHECK(lower.count(face) == 1);
        }
      }
    }
    CHECK(component_count(c) == 1);
  }
  CHECK_THROWS_AS(build_coset_complex(extraspecial32(), 2, 100), Error);
  CHECK_THROWS_AS(build_coset_complex(quaternion8(), 3), Error);

  const auto j = s3.to_json();
  CHECK(j["vertices"].size() == 17);
  CHECK(j["f_vector"] == nlohmann::json::array({17, 24}));
}

TEST_CASE("Smith normal form") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-6, 6), shape(1, 7), density(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    SparseIntMatrix m;
    m.rows = static_cast<std::size_t>(shape(rng));
    m.cols.resize(static_cast<std::size_t>(shape(rng)));
    for (auto& col : m.cols)
      for (std::uint32_t i = 0; i < m.rows; ++i)
        if (density(rng) == 0) col.emplace_back(i, val(rng));
    const auto a = smith_invariants(m);
    const auto b = smith_invariants_dense(m);
    CHECK(a == b);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) CHECK(mpz_divisible_p(a[k + 1].get_mpz_t(), a[k].get_mpz_t()));
  }
  SparseIntMatrix m{2, {{{0, 2}}, {{1, 3}}}};
  CHECK(smith_invariants(m) == std::vector<mpz_class>{1, 6});
  // entries past int64 take the mpz path
  const mpz_class big = mpz_class(1) << 70;
  SparseIntMatrix wide{2, {{{0, big}, {1, 1}}, {{0, big * 3}, {1, 1}}}};
  CHECK(smith_invariants(wide) == smith_invariants_dense(wide));
  SparseIntMatrix grow{2, {{{0, mpz_class(1) << 40}, {1, 1}}, {{0, 1}, {1, mpz_class(1) << 40}}}};
  CHECK(smith_invariants(grow) == smith_invariants_dense(grow));
  SparseIntMatrix z{3, {{}, {}}};
  CHECK(smith_invariants(z).empty());
}

TEST_CASE("homology") {
  const CosetComplex es = build_coset_complex(extraspecial32(), 2);
  const HomologySummary h = homology(es);
  REQUIRE(h.groups.size() == 3);
  CHECK(h.groups[0].betti == 1);
  CHECK(h.groups[0].torsion.empty());
  CHECK(h.groups[1].betti == 0);
  CHECK(h.groups[1].torsion == std::vector<mpz_class>{2});
  CHECK(h.groups[2].betti == 75);
  CHECK(h.groups[2].torsion.empty());
  CHECK(h.to_string() == "H_0 = Z, H_1 = Z/2, H_2 = Z^75");
  CHECK(h.euler_characteristic() == 76);

  // dense elimination agrees on the extraspecial boundary maps
  for (int d = 1; d <= es.dimension(); ++d)
    CHECK(smith_invariants(boundary_matrix(es, d)) == smith_invariants_dense(boundary_matrix(es, d)));

  CHECK(homology(build_coset_complex(symmetric(3), 2)).to_string() == "H_0 = Z, H_1 = Z^8");
  CHECK(homology(build_coset_complex(dihedral(16), 2)).to_string() == "H_0 = Z, H_1 = Z^15");

  for (const std::string spec : {"D8", "Q8", "A4", "S4", "SL(2,3)", "A5", "D12"}) {
    CAPTURE(spec);
    const CosetComplex c = build_coset_complex(make_group(spec), 2);
    const HomologySummary hs = homology(c);
    CHECK(hs.euler_characteristic() == c.euler_characteristic());
    CHECK(hs.groups[0].betti == component_count(c));
  }
  const auto j = h.to_json();
  CHECK(j["groups"][1]["torsion"] == nlohmann::json::array({2}));
}

TEST_CASE("divisibility") {
  const auto es = divisibility_check(extraspecial32(), 2);
  CHECK(es.m_q == 4);
  CHECK(es.chi == 76);
  CHECK(es.divides);
  CHECK(divisibility_check(symmetric(3), 2).m_q == 1);
  CHECK(divisibility_check(make_group("SL(2,4)"), 2).m_q == 1);
  for (const std::string spec : {"D8", "D16", "Q8", "S4", "A4", "PSL(2,7)", "S5", "SL(2,3)"}) {
    CAPTURE(spec);
    for (unsigned q = 2; q <= 3; ++q) {
      const FiniteGroup g = make_group(spec);
      if (class_below(g, g.full_mask(), q)) continue;
      CHECK(divisibility_check(g, q).divides);
    }
  }
}

namespace {

// Rank over F_p by the standard column reduction: add earlier columns until
// the lowest row index is unclaimed.
std::size_t rank_mod_p(const SparseIntMatrix& m, long p) {
  std::map<std::uint32_t, std::map<std::uint32_t, long>> pivots;  // low row -> column
  std::size_t rank = 0;
  for (const auto& col : m.cols) {
    std::map<std::uint32_t, long> v;
    for (const auto& [i, x] : col) {
      const long r = ((x.get_si() % p) + p) % p;
      if (r) v[i] = r;
    }
    while (!v.empty()) {
      auto low = std::prev(v.end());
      auto it = pivots.find(low->first);
      if (it == pivots.end()) break;
      // v -= (v_low / w_low) w
      const auto& w = it->second;
      long inv = 1;
      while (inv * w.at(low->first) % p != 1) ++inv;
      const long f = low->second * inv % p;
      for (const auto& [i, x] : w) {
        long& e = v[i];
        e = ((e - f * x) % p + p) % p;
        if (e == 0) v.erase(i);
      }
    }
    if (!v.empty()) {
      pivots.emplace(std::prev(v.end())->first, std::move(v));
      ++rank;
    }
  }
  return rank;
}

}  // namespace

TEST_CASE("torsion agrees with ranks mod p") {
  for (const std::string spec : {"S4", "S5", "PSL(2,7)"}) {
    CAPTURE(spec);
    const CosetComplex c = build_coset_complex(make_group(spec), 2);
    for (int d = 1; d <= c.dimension(); ++d) {
      CAPTURE(d);
      const SparseIntMatrix m = boundary_matrix(c, d);
      const auto inv = smith_invariants(m);
      for (long p : {2L, 3L, 7L}) {
        std::size_t divisible = 0;
        for (const auto& x : inv) divisible += mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        CHECK(inv.size() - divisible == rank_mod_p(m, p));
      }
    }
  }
  CHECK(homology(build_coset_complex(make_group("S5"), 2)).groups[1].torsion.size() == 9);
}
