// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nilzeta/conjbounds.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/reference.hpp"
#include "nilzeta/symfunc.hpp"
#include "nilzeta/topology.hpp"
#include "oracles.hpp"

using namespace nilzeta;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::vector<std::string> corpus_specs() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 12; ++n) specs.push_back("C" + std::to_string(n));
  for (int order = 4; order <= 32; order += 2) specs.push_back("D" + std::to_string(order));
  for (const char* s : {"Q8", "S3", "S4", "A4", "A5", "SL(2,4)", "PSL(2,7)", "ES32"}) specs.push_back(s);
  return specs;
}

const std::vector<FiniteGroup>& corpus() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (const auto& s : corpus_specs()) out.push_back(make_group(s));
    return out;
  }();
  return groups;
}

unsigned hardware_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void absorb(Outcome& o, const std::vector<ReferenceCheck>& checks) {
  for (const auto& c : checks) o.expect(c.passed, c.name + ": " + c.detail);
}

mpz_class power(std::size_t base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// P_q(G,s)·|G|^s as an integer
mpz_class series_count(const DirichletPolynomial& p, std::size_t order, unsigned s) {
  const ExactRational v = p.eval_at(static_cast<long>(s)) * power(order, s);
  if (v.get_den() != 1) return -1;
  return v.get_num();
}

// μ(H,G) from the interval definition μ(H,u) = -Σ_{H≤v<u} μ(H,v), per H.
std::vector<std::int64_t> mobius_from_below(const NilpotentPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::int64_t> out(n, 0);
  std::vector<std::int64_t> mu(n);
  for (std::size_t h = 0; h < n; ++h) {
    std::fill(mu.begin(), mu.end(), 0);
    mu[h] = 1;
    std::int64_t total = 1;
    // records are in canonical order (by order), so every v < u comes first
    for (std::size_t u = h + 1; u < n; ++u) {
      if (!p.strictly_above(h).test(static_cast<Elem>(u))) continue;
      std::int64_t sum = 0;
      for (std::size_t v = h; v < u; ++v)
        if (mu[v] != 0 && p.leq(v, u)) sum += mu[v];
      mu[u] = -sum;
      total += mu[u];
    }
    out[h] = -total;
  }
  return out;
}

// commuting s-tuples, pairwise check only
std::uint64_t commuting_tuples(const FiniteGroup& g, unsigned s) {
  std::uint64_t count = 0;
  std::vector<Elem> t(s, 0);
  while (true) {
    bool ok = true;
    for (unsigned i = 0; i < s && ok; ++i)
      for (unsigned j = i + 1; j < s && ok; ++j) ok = g.commute(t[i], t[j]);
    count += ok;
    std::size_t k = 0;
    while (k < s && ++t[k] == g.order()) t[k++] = 0;
    if (k == s) break;
  }
  return count;
}

// Tuples of G that are q-nilpotent, over tuples whose image in G/N is.
ExactRational brute_lift_ratio(const FiniteGroup& g, const ElementMask& n, unsigned q) {
  const Quotient quo = quotient(g, n);
  std::uint64_t num = 0, den = 0;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      ElementMask up(g.order());
      up.set(x);
      up.set(y);
      const int c = oracle::nil_class(g, oracle::closure(g, up));
      ElementMask down(quo.group.order());
      down.set(quo.projection[x]);
      down.set(quo.projection[y]);
      const int d = oracle::nil_class(quo.group, oracle::closure(quo.group, down));
      if (d >= 0 && d < static_cast<int>(q)) {
        ++den;
        if (c >= 0 && c < static_cast<int>(q)) ++num;
      }
    }
  ExactRational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
  r.canonicalize();
  return r;
}

Outcome criterion_series() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Series));
  return o;
}

Outcome criterion_mobius() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Mobius));
  return o;
}

Outcome criterion_euler() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Euler));
  for (const FiniteGroup& g : corpus())
    for (unsigned q = 2; q <= 3; ++q) {
      if (class_below(g, g.full_mask(), q)) continue;
      const std::string tag = g.name() + " q=" + std::to_string(q);
      const EulerRoutes r = euler_routes(g, q);
      o.expect(r.series == r.lattice && r.series == r.crosscut,
               tag + ": routes " + r.series.get_str() + "/" + r.lattice.get_str() + "/" + r.crosscut.get_str());
      o.expect(build_coset_complex(g, q).euler_characteristic() == r.series, tag + ": complex");
    }
  return o;
}

Outcome criterion_homology() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Homology));
  return o;
}

Outcome criterion_factorization() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Factorization));
  return o;
}

Outcome criterion_stretch() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Stretch));
  return o;
}

Outcome criterion_brute() {
  Outcome o;
  for (const FiniteGroup& g : corpus()) {
    if (g.order() > 60) continue;
    for (unsigned q = 2; q <= 3; ++q) {
      const DirichletPolynomial p = series_pq(g, q);
      for (unsigned s = 1; s <= 3; ++s) {
        const std::string tag = g.name() + " q=" + std::to_string(q) + " s=" + std::to_string(s);
        const mpz_class expect = series_count(p, g.order(), s);
        o.expect(brute_hom_count(g, q, s, 1000000000, hardware_jobs()) == expect, tag);
        if (power(g.order(), s) <= 5000)
          o.expect(mpz_class(static_cast<unsigned long>(oracle::hom_count(g, q, s))) == expect, tag + " naive");
      }
    }
  }
  return o;
}

Outcome criterion_symmetric() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::Symmetric));
  for (unsigned n = 1; n <= 5; ++n) {
    const FiniteGroup g = symmetric(n);
    for (unsigned s = 1; s <= 3; ++s)
      o.expect(hom_count_symmetric(n, s) == mpz_class(static_cast<unsigned long>(commuting_tuples(g, s))),
               "S" + std::to_string(n) + " s=" + std::to_string(s));
  }
  for (unsigned r = 1; r <= 12; ++r)
    for (unsigned s = 1; s <= 4; ++s)
      o.expect(j_count(r, s) == mpz_class(static_cast<unsigned long>(oracle::hnf_count(r, s, s <= 3))),
               "j_" + std::to_string(r) + "(Z^" + std::to_string(s) + ")");
  return o;
}

Outcome criterion_psl() {
  Outcome o;
  absorb(o, reference_checks(ReferenceTopic::PslClosedForm));
  for (std::uint64_t p : {5, 7, 11}) {
    const FiniteGroup g = projective_special_linear2(static_cast<unsigned>(p));
    o.expect(psl_series(p) == series_pq(g, 2), "PSL(2," + std::to_string(p) + ")");
  }
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  const ExactRational one(1);

  for (const FiniteGroup& g : corpus()) {
    const std::string name = g.name();
    std::vector<DirichletPolynomial> r;  // R_2, R_3, R_4
    for (unsigned q = 2; q <= 4; ++q) r.push_back(series_rq(g, q));

    for (unsigned q = 2; q <= 3; ++q)
      o.expect(series_pq(g, q).eval_at(1) == one, "normalization " + name + " q=" + std::to_string(q));

    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      for (long s = 1; s <= 3; ++s)
        o.expect(r[i].eval_at(s) >= r[i + 1].eval_at(s),
                 "monotonicity " + name + " q=" + std::to_string(i + 2) + " s=" + std::to_string(s));

    for (unsigned q = 2; q <= 3; ++q) {
      if (class_below(g, g.full_mask(), q)) continue;
      const std::string tag = name + " q=" + std::to_string(q);
      const NilpotentPoset p = build_lattice(g, q);
      const auto& mu = p.mobius_to_top();
      bool hall = true;
      for (std::size_t i = 0; i < p.size(); ++i) hall = hall && (p.records()[i].in_mq || mu[i] == 0);
      o.expect(hall, "Hall vanishing " + tag);
      o.expect(mobius_from_below(p) == mu, "Möbius recursions " + tag);
      o.expect(divisibility_check(g, q).divides, "m_q | chi " + tag);
    }

    for (unsigned n = 1; n <= 4; ++n) {
      const KCountRoutes k = k_count_routes(g, n, g.order() <= 60);
      o.expect(k.agree(), "k_" + std::to_string(n) + " routes " + name);
      if (power(g.order(), n) <= 200000)
        o.expect(k.series == mpz_class(static_cast<unsigned long>(oracle::commuting_orbits(g, n))),
                 "k_" + std::to_string(n) + " orbits " + name);
    }

    const bool abelian = is_abelian(g);
    std::vector<ElementMask> subs = all_subgroups(g);
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<BoundReport> reports;
      for (const ElementMask& h : subs) {
        reports.push_back(check_subgroup_bounds(g, h, n));
        if (is_normal(g, h)) reports.push_back(check_quotient_bound(g, h, n));
      }
      if (!abelian) {
        reports.push_back(check_centralizer_bound(g, n));
        reports.push_back(check_center_bounds(g, n));
      }
      if (n >= 2) reports.push_back(check_congruence(g, n));
      for (const auto& rep : reports) o.expect(rep.holds(), rep.name + " " + name + " n=" + std::to_string(n));
    }
  }

  // product identity on random pairs
  std::vector<const FiniteGroup*> pool;
  for (const FiniteGroup& g : corpus())
    if (g.order() <= 24) pool.push_back(&g);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int pairs = 0;
  while (pairs < 10) {
    const FiniteGroup& a = *pool[pick(rng)];
    const FiniteGroup& b = *pool[pick(rng)];
    if (a.order() * b.order() > 240 || a.order() == 1 || b.order() == 1) continue;
    ++pairs;
    const FiniteGroup ab = direct_product(a, b);
    for (unsigned q = 2; q <= 3; ++q)
      o.expect(series_pq(ab, q) == series_pq(a, q) * series_pq(b, q),
               "product " + a.name() + " x " + b.name() + " q=" + std::to_string(q));
  }

  // nilpotent groups split over their Sylow subgroups
  for (const std::string spec : {"Q8xC9", "D8xC3"}) {
    const FiniteGroup g = make_group(spec);
    for (unsigned q = 2; q <= 3; ++q) {
      DirichletPolynomial prod = DirichletPolynomial::one();
      for (std::uint64_t p : prime_divisors(g.order()))
        prod = prod * series_pq(induced_subgroup(g, p_elements(g, p)).group, q);
      o.expect(series_pq(g, q) == prod, "Sylow " + spec + " q=" + std::to_string(q));
    }
  }

  // conditional probability against the literal lift ratio
  const FiniteGroup s3 = symmetric(3), s4 = symmetric(4);
  const ElementMask a3 = commutator_subgroup(s3, s3.full_mask(), s3.full_mask());
  const ElementMask a4 = commutator_subgroup(s4, s4.full_mask(), s4.full_mask());
  const ElementMask v4 = commutator_subgroup(s4, a4, a4);
  const std::pair<const FiniteGroup*, ElementMask> cases[] = {{&s3, a3}, {&s4, a4}, {&s4, v4}};
  for (const auto& [g, n] : cases)
    for (unsigned q = 2; q <= 3; ++q)
      o.expect(conditional_probability(*g, n, q, 2) == brute_lift_ratio(*g, n, q),
               "conditional " + g->name() + "/" + std::to_string(n.count()) + " q=" + std::to_string(q));
  return o;
}

int report(const std::string& label, const std::string& title, double limit_s, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.failures.push_back("time limit " + std::to_string(limit_s) + " s exceeded");
  }
  std::cout << "criterion " << label << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  (" << o.checks
            << " checks, " << std::fixed << std::setprecision(2) << secs << " s)\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--include-stretch") {
      stretch = true;
    } else {
      std::cerr << "usage: nilzeta_acceptance [--include-stretch]\n";
      return 2;
    }
  }
  int failed = 0;
  failed += report("1", "series golden set", 5, criterion_series);
  failed += report("2", "Möbius golden set", 5, criterion_mobius);
  failed += report("3", "Euler characteristics, three routes on the corpus", 60, criterion_euler);
  failed += report("4", "homology", 120, criterion_homology);
  failed += report("5", "factorization and irreducibility", 60, criterion_factorization);
  if (stretch) failed += report("5-stretch", "R_2(M11) term-for-term and irreducible", 3600, criterion_stretch);
  failed += report("6", "brute-force concordance", 600, criterion_brute);
  failed += report("7", "symmetric-group counts", 60, criterion_symmetric);
  failed += report("8", "PSL(2,p) closed form", 300, criterion_psl);
  failed += report("9", "property suites", 600, criterion_properties);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
