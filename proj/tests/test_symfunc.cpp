#include "doctest.h"
#include "oracles.hpp"

#include <set>

#include "nilzeta/families.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/symfunc.hpp"

using namespace nilzeta;

TEST_CASE("partitions") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(10).size() == 42);
  CHECK(partitions(4).front().parts() == std::vector<unsigned>{4});
  CHECK(partitions(4).back().parts() == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(partitions(4)[2].to_string() == "2^2");
  for (unsigned n = 0; n <= 20; ++n) {
    const auto ps = partitions(n);
    CHECK(mpz_class(static_cast<unsigned long>(ps.size())) == partition_count(n));
    std::set<std::vector<unsigned>> seen;
    for (const auto& p : ps) {
      CHECK(p.size() == n);
      CHECK(seen.insert(p.parts()).second);
    }
  }
  CHECK(partition_count(100) == mpz_class("190569292"));
}

TEST_CASE("subgroups of Z^s") {
  for (unsigned s = 1; s <= 6; ++s) CHECK(j_count(1, s) == 1);
  CHECK(j_count(2, 2) == 3);
  CHECK(j_count(2, 3) == 7);
  for (unsigned r = 1; r <= 12; ++r)
    for (unsigned s = 1; s <= 4; ++s) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(j_count(r, s) == oracle::hnf_count(r, s));
    }
  // the enumerated matrices really give distinct sublattices of the right index
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned s = 1; s <= 3; ++s) CHECK(oracle::hnf_count(r, s, true) == j_count(r, s));

  for (unsigned r = 1; r <= 50; ++r) {
    unsigned long sigma = 0;
    for (unsigned d = 1; d <= r; ++d)
      if (r % d == 0) sigma += d;
    CHECK(j_count(r, 2) == sigma);
  }
  for (unsigned r = 1; r <= 12; ++r)
    for (unsigned s = 2; s <= 4; ++s) {
      mpz_class rec = 0;
      for (unsigned d = 1; d <= r; ++d)
        if (r % d == 0) {
          mpz_class w;
          mpz_ui_pow_ui(w.get_mpz_t(), d, s - 1);
          rec += w * j_count(r / d, s - 1);
        }
      CHECK(j_count(r, s) == rec);
    }
  // Σ_{d|r} j_d(Z^{s-1}) without the weights undercounts already at r = s = 2
  CHECK(j_count(1, 1) + j_count(2, 1) == 2);
  CHECK(j_count(2, 2) == 3);
}

TEST_CASE("commuting tuples in symmetric groups") {
  CHECK(hom_count_symmetric(3, 2) == 18);
  CHECK(hom_count_symmetric(4, 2) == 120);
  CHECK(hom_count_symmetric(0, 3) == 1);
  for (unsigned s = 1; s <= 8; ++s) CHECK(hom_count_symmetric(2, s) == mpz_class(1UL << s));
  for (unsigned n = 1; n <= 10; ++n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    CHECK(hom_count_symmetric(n, 1) == f);
    CHECK(hom_count_symmetric(n, 2) == f * partition_count(n));
  }
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned s = 1; s <= 3; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      CHECK(hom_count_symmetric(n, s) == brute_hom_count(symmetric(n), 2, s));
    }
  for (unsigned n = 1; n <= 4; ++n) CHECK(hom_count_symmetric(n, 2) == oracle::hom_count(symmetric(n), 2, 2));
  CHECK(hom_count_symmetric(6, 3) == brute_hom_count(symmetric(6), 2, 3));
}
