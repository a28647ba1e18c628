#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"

using namespace nilzeta;

namespace {

Elem find_label(const FiniteGroup& g, const std::string& label) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  FAIL("no element labelled " << label);
  return 0;
}

Elem first_of_order(const FiniteGroup& g, std::size_t ord) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == ord) return x;
  FAIL("no element of order " << ord);
  return 0;
}

const std::vector<std::string> kCorpus = {"C1",  "C6", "C12", "D8",   "D16",      "D32",      "Q8",
                                          "S3",  "S4", "A4",  "A5",   "SL(2,4)",  "PSL(2,7)", "ES32",
                                          "C2xC3", "S3xC2", "Q8xC9", "D8xC3", "SL(2,3)", "PSL(2,11)"};

}  // namespace

TEST_CASE("family orders") {
  CHECK(make_group("S4").order() == 24);
  CHECK(make_group("A5").order() == 60);
  CHECK(make_group("D10").order() == 10);
  CHECK(make_group("PSL(2,7)").order() == 168);
  CHECK(make_group("SL(2,4)").order() == 60);
  CHECK(make_group("SL(2,9)").order() == 720);
  CHECK(make_group("PSL(2,9)").order() == 360);
  CHECK(make_group("SL(2,8)").order() == 504);
  CHECK(make_group("SL(2,16)").order() == 4080);
  CHECK(make_group("PSL(2,13)").order() == 1092);
  CHECK(make_group("S8", 50000).order() == 40320);
  CHECK(make_group("ES32").order() == 32);
  CHECK(make_group("central(Q8,Q8)").order() == 32);
  CHECK(make_group("C2xC3").order() == 6);
  CHECK(make_group("M11", 10000).order() == 7920);
}

TEST_CASE("bad specs") {
  CHECK_THROWS_AS(make_group("X5"), Error);
  try {
    make_group("Foo");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFamily);
  }
  try {
    make_group("S8", 10000);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
  CHECK_THROWS_AS(make_group("C0"), Error);
  CHECK_THROWS_AS(make_group("D7"), Error);
  CHECK_THROWS_AS(make_group("SL(2,6)"), Error);
  CHECK_THROWS_AS(make_group("C3x"), Error);
}

TEST_CASE("group axioms across the corpus") {
  for (const auto& spec : kCorpus) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    CHECK(check_group_axioms(g) == "");
  }
  CHECK(check_group_axioms(make_group("M11"), 256, 20000) == "");
}

TEST_CASE("closure") {
  const FiniteGroup c6 = cyclic(6);
  const Elem two = first_of_order(c6, 2);
  const Elem one[] = {two};
  CHECK(closure(c6, one).count() == 2);

  const FiniteGroup s3 = symmetric(3);
  const Elem gens[] = {find_label(s3, "(1,2)"), find_label(s3, "(1,2,3)")};
  CHECK(closure(s3, gens).count() == 6);

  const FiniteGroup q8 = quaternion8();
  const Elem ij[] = {find_label(q8, "i"), find_label(q8, "j")};
  CHECK(closure(q8, ij).count() == 8);

  // against the naive fixpoint, every pair of elements of S4 and ES32
  for (const std::string spec : {"S4", "ES32", "A4"}) {
    const FiniteGroup g = make_group(spec);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = a; b < g.order(); b += 3) {
        ElementMask seed(g.order());
        seed.set(a);
        seed.set(b);
        CHECK(closure(g, seed) == oracle::closure(g, seed));
      }
  }
}

TEST_CASE("centralizer and center") {
  const FiniteGroup q8 = quaternion8();
  const Elem i = find_label(q8, "i");
  const ElementMask ci = centralizer(q8, ElementMask::singleton(8, i));
  CHECK(ci.count() == 4);
  CHECK(ci.test(find_label(q8, "-1")));
  CHECK(ci.test(find_label(q8, "-i")));
  CHECK(center(q8).count() == 2);

  const FiniteGroup s3 = symmetric(3);
  const Elem r = find_label(s3, "(1,2,3)");
  const ElementMask cr = centralizer(s3, ElementMask::singleton(6, r));
  CHECK(cr.count() == 3);
  CHECK(cr.test(r));

  CHECK(center(cyclic(9)).count() == 9);
  CHECK(centralizer(make_group("C4xC2"), make_group("C4xC2").full_mask()).count() == 8);
  CHECK(centralizer(s3, s3.empty_mask()).count() == 6);
  CHECK(center(extraspecial32()).count() == 2);
  CHECK(center(make_group("S3xC2")).count() == 2);

  for (const auto& spec : kCorpus) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    const ElementMask z = center(g);
    CHECK(z == oracle::centralizer(g, g.full_mask()));
    CHECK(g.order() % z.count() == 0);
    for (Elem x = 0; x < g.order(); x += 1 + g.order() / 40) {
      const ElementMask c = centralizer(g, ElementMask::singleton(g.order(), x));
      CHECK(c == oracle::centralizer(g, ElementMask::singleton(g.order(), x)));
      CHECK(z.is_subset_of(c));
      CHECK(c.test(x));
      CHECK(is_subgroup(g, c));
    }
  }
}

TEST_CASE("commutator subgroups and class") {
  const FiniteGroup s3 = symmetric(3);
  CHECK(commutator_subgroup(s3, s3.full_mask(), s3.full_mask()).count() == 3);
  const FiniteGroup d8 = dihedral(8);
  const ElementMask dd = commutator_subgroup(d8, d8.full_mask(), d8.full_mask());
  CHECK(dd == center(d8));
  CHECK(commutator_subgroup(d8, center(d8), d8.full_mask()).count() == 1);

  CHECK(nilpotency_class(d8) == NilpotencyClass::finite(2));
  CHECK(nilpotency_class(s3) == NilpotencyClass::infinite());
  CHECK(nilpotency_class(cyclic(7)) == NilpotencyClass::finite(1));
  CHECK(nilpotency_class(cyclic(1)) == NilpotencyClass::finite(0));
  CHECK(nilpotency_class(dihedral(16)) == NilpotencyClass::finite(3));
  CHECK(nilpotency_class(dihedral(32)) == NilpotencyClass::finite(4));
  CHECK(nilpotency_class(extraspecial32()) == NilpotencyClass::finite(2));
  CHECK(nilpotency_class(make_group("A5")).to_string() == "inf");
  CHECK_THROWS_AS(nilpotency_class(s3).value(), Error);
  CHECK(class_below(d8, d8.full_mask(), 3));
  CHECK(!class_below(d8, d8.full_mask(), 2));
  CHECK(class_below(s3, s3.trivial_mask(), 2));

  for (const std::string spec : {"S3", "D8", "D16", "Q8", "A4", "S4", "ES32", "D8xC3", "SL(2,3)"}) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    for (const ElementMask& h : oracle::all_subgroups(g)) {
      const int c = oracle::nil_class(g, h);
      const NilpotencyClass nc = nilpotency_class(g, h);
      if (c < 0) {
        CHECK(!nc.is_finite());
      } else {
        CHECK(nc == NilpotencyClass::finite(static_cast<unsigned>(c)));
      }
      CHECK(commutator_subgroup(g, h, g.full_mask()) == oracle::commutator(g, h, g.full_mask()));
      CHECK(commutator_subgroup(g, h, h) == oracle::commutator(g, h, h));
    }
  }
}

TEST_CASE("class is monotone on subgroups of nilpotent groups") {
  for (const std::string spec : {"D16", "ES32", "D8xC3", "Q8xC9", "S4"}) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    const auto subs = oracle::all_subgroups(g);
    for (const auto& h : subs) {
      const NilpotencyClass ch = nilpotency_class(g, h);
      if (!ch.is_finite()) continue;
      for (const auto& k : subs)
        if (k.is_subset_of(h)) CHECK(nilpotency_class(g, k).value() <= ch.value());
    }
  }
}

TEST_CASE("quotients") {
  const FiniteGroup s3 = symmetric(3);
  CHECK(quotient(s3, s3.full_mask()).group.order() == 1);
  const ElementMask a3 = commutator_subgroup(s3, s3.full_mask(), s3.full_mask());
  CHECK(quotient(s3, a3).group.order() == 2);

  const FiniteGroup q8 = quaternion8();
  const Quotient v4 = quotient(q8, center(q8));
  CHECK(v4.group.order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(v4.group.element_order(x) == 2);

  ElementMask not_normal = s3.trivial_mask();
  not_normal.set(find_label(s3, "(1,2)"));
  try {
    quotient(s3, not_normal);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }

  for (const std::string spec : {"S4", "ES32", "D16", "SL(2,3)"}) {
    CAPTURE(spec);
    const FiniteGroup g = make_group(spec);
    for (const ElementMask& n : oracle::all_subgroups(g)) {
      if (!is_normal(g, n)) continue;
      const Quotient qt = quotient(g, n);
      CHECK(qt.group.order() * n.count() == g.order());
      CHECK(check_group_axioms(qt.group) == "");
      for (Elem a = 0; a < g.order(); ++a) {
        CHECK((qt.projection[a] == 0) == n.test(a));
        for (Elem b = 0; b < g.order(); ++b)
          if (qt.projection[g.mul(a, b)] != qt.group.mul(qt.projection[a], qt.projection[b])) {
            FAIL("projection is not a homomorphism");
          }
      }
    }
  }
}

TEST_CASE("products") {
  const FiniteGroup c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(c6.order() == 6);
  CHECK(is_abelian(c6));
  bool has_order_6 = false;
  for (Elem x = 0; x < 6; ++x) has_order_6 = has_order_6 || c6.element_order(x) == 6;
  CHECK(has_order_6);

  const FiniteGroup s3c2 = direct_product(symmetric(3), cyclic(2));
  CHECK(s3c2.order() == 12);
  CHECK(center(s3c2).count() == 2);

  const FiniteGroup es = extraspecial32();
  CHECK(es.order() == 32);
  const ElementMask z = center(es);
  CHECK(z.count() == 2);
  CHECK(commutator_subgroup(es, es.full_mask(), es.full_mask()) == z);
  // Frattini = squares here, and it equals the center
  ElementMask squares(32);
  for (Elem x = 0; x < 32; ++x) squares.set(es.mul(x, x));
  CHECK(closure(es, squares) == z);

  const FiniteGroup q8 = quaternion8();
  const Elem m1 = find_label(q8, "-1");
  const std::pair<Elem, Elem> id[] = {{0, 0}, {m1, m1}};
  CHECK(central_product(q8, q8, id).order() == 32);
  const std::pair<Elem, Elem> bad[] = {{0, 0}, {m1, find_label(q8, "i")}};
  try {
    central_product(q8, q8, bad);
    FAIL("expected BadIdentification");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadIdentification);
  }
  const FiniteGroup big = direct_product(make_group("A5"), make_group("S4"), 10000);
  CHECK(big.order() == 1440);
  CHECK(check_group_axioms(big, 0, 20000) == "");
  const FiniteGroup huge = direct_product(make_group("A5"), make_group("PSL(2,7)"), 20000);
  CHECK(huge.order() == 10080);
  CHECK(!huge.table_backed());
  CHECK(check_group_axioms(huge, 0, 20000) == "");
}

TEST_CASE("cosets and p-elements") {
  const FiniteGroup s4 = symmetric(4);
  const ElementMask a4 = commutator_subgroup(s4, s4.full_mask(), s4.full_mask());
  const CosetPartition cp = left_cosets(s4, a4);
  CHECK(cp.reps.size() == 2);
  CHECK(cp.reps[0] == 0);
  CHECK(p_elements(s4, 3).count() == 9);
  CHECK(p_elements(s4, 2).count() == 16);
  CHECK(p_elements(s4, 5).count() == 1);
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(p_part(360, 2) == 8);
  CHECK(is_prime(7919));
  CHECK(!is_prime(7917));
}
