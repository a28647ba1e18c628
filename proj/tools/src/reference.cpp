#include "nilzeta/reference.hpp"

#include <map>
#include <set>

#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/symfunc.hpp"
#include "nilzeta/topology.hpp"

namespace nilzeta {

namespace {

using DP = DirichletPolynomial;

DP series(std::initializer_list<std::pair<std::uint64_t, long>> terms) {
  DP d;
  for (auto [n, c] : terms) d.add_term(n, c);
  return d;
}

ReferenceCheck series_check(const std::string& name, const DP& expected, const DP& got) {
  const auto diff = term_differences(expected, got);
  std::string detail = got.to_string();
  if (!diff.empty()) {
    detail = "mismatch:";
    for (const auto& d : diff) detail += " " + d + ";";
  }
  return {name, diff.empty(), detail};
}

ReferenceCheck value_check(const std::string& name, const mpz_class& expected, const mpz_class& got) {
  return {name, expected == got, "expected " + expected.get_str() + ", got " + got.get_str()};
}

ReferenceCheck text_check(const std::string& name, const std::string& expected, const std::string& got) {
  return {name, expected == got, expected == got ? got : "expected " + expected + ", got " + got};
}

}  // namespace

DP single_prime_series(std::uint64_t p, const std::vector<long>& coeffs) {
  DP d;
  std::uint64_t n = 1;
  for (long c : coeffs) {
    d.add_term(n, c);
    n *= p;
  }
  return d;
}

DP reference_r2_m11() {
  return series({{1, 1},
                 {720, -144},
                 {880, -55},
                 {990, -495},
                 {1320, -660},
                 {1584, -396},
                 {1980, 330},
                 {2640, 660},
                 {3960, 1980},
                 {7920, -561}});
}

std::vector<std::string> term_differences(const DP& expected, const DP& got) {
  std::vector<std::string> out;
  std::map<std::uint64_t, std::pair<mpz_class, mpz_class>> all;
  for (const auto& [n, c] : expected.terms()) all[n].first = c;
  for (const auto& [n, c] : got.terms()) all[n].second = c;
  for (const auto& [n, v] : all)
    if (v.first != v.second)
      out.push_back("index " + std::to_string(n) + ": expected " + v.first.get_str() + ", got " + v.second.get_str());
  return out;
}

namespace {

const DP& psl7_golden() {
  static const DP d = series({{24, 8}, {42, 35}, {56, 28}, {84, -42}, {168, -28}});
  return d;
}

std::string dihedral_tag(const char* what, unsigned q, std::uint64_t order) {
  return std::string(what) + "_" + std::to_string(q) + "(D" + std::to_string(order) + ")";
}

void series_goldens(std::vector<ReferenceCheck>& out) {
  out.push_back(series_check("P_2(S3)", series({{2, 1}, {3, 3}, {6, -3}}), series_pq(symmetric(3), 2)));
  for (std::uint64_t n : {4, 6, 8, 10}) {
    const long k = static_cast<long>(n / 2);
    out.push_back(series_check("P_2(D" + std::to_string(2 * n) + ")",
                               series({{2, 1}, {static_cast<std::uint64_t>(k), k}, {n, -k}}),
                               series_pq(dihedral(2 * n), 2)));
  }
  out.push_back(series_check("P_2(A4)", series({{3, 1}, {4, 4}, {12, -4}}), series_pq(alternating(4), 2)));
  out.push_back(
      series_check("P_2(A5)", series({{12, 6}, {15, 5}, {20, 10}, {60, -20}}), series_pq(alternating(5), 2)));
  out.push_back(
      series_check("P_2(S4)", series({{6, 7}, {8, 4}, {12, -6}, {24, -4}}), series_pq(symmetric(4), 2)));
  out.push_back(series_check("P_3(S4)", series({{3, 3}, {6, -2}, {8, 4}, {24, -4}}), series_pq(symmetric(4), 3)));
  out.push_back(series_check("P_2(PSL(2,7))", psl7_golden(), series_pq(make_group("PSL(2,7)"), 2)));
  out.push_back(series_check("P_2(ES32)", series({{4, 15}, {8, -30}, {16, 16}}), series_pq(extraspecial32(), 2)));
}

void mobius_goldens(std::vector<ReferenceCheck>& out) {
  const NilpotentPoset p = build_lattice(extraspecial32(), 2);
  std::map<std::size_t, std::set<std::int64_t>> by_order;
  // the table lists intersections of maximal abelian subgroups; μ vanishes elsewhere
  bool off_zero = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.records()[i].in_mq)
      by_order[p.records()[i].order].insert(p.mobius_to_top()[i]);
    else
      off_zero = off_zero && p.mobius_to_top()[i] == 0;
  }
  const bool ok = off_zero && by_order.size() == 3 && by_order[8] == std::set<std::int64_t>{-1} &&
                  by_order[4] == std::set<std::int64_t>{2} && by_order[2] == std::set<std::int64_t>{-16};
  std::string detail;
  for (std::size_t o : {8, 4, 2}) {
    detail += "|H|=" + std::to_string(o) + ":";
    for (auto v : by_order[o]) detail += " " + std::to_string(v);
    detail += "; ";
  }
  out.push_back({"mu_2(H, ES32) on M_2 by order 8/4/2", ok, detail});
}

void euler_goldens(std::vector<ReferenceCheck>& out) {
  out.push_back(value_check("chi(E(2,ES32))", 76, euler_characteristic(extraspecial32(), 2)));
  const long q = 4;
  const long wedge = (q * q - 1) * (q * q - 1) * (q + 1) - q * q * (q * q + 1) + 1;
  out.push_back(value_check("chi(E(2,SL(2,4))) = 1 - wedge count", 1 - wedge,
                            euler_characteristic(make_group("SL(2,4)"), 2)));
}

// dihedral 2-groups D_{2n}, n = 2^r: E(r-k+1, D_{2n}) is a wedge of 4^k - 1 circles
void homology_goldens(std::vector<ReferenceCheck>& out) {
  out.push_back(text_check("H_*(E(2,ES32))", "H_0 = Z, H_1 = Z/2, H_2 = Z^75",
                           homology(build_coset_complex(extraspecial32(), 2)).to_string()));
  out.push_back(
      text_check("H_*(E(2,S3))", "H_0 = Z, H_1 = Z^8", homology(build_coset_complex(symmetric(3), 2)).to_string()));
  for (unsigned r = 2; r <= 5; ++r) {
    const std::uint64_t n = std::uint64_t{1} << r;
    const FiniteGroup d = dihedral(2 * n);
    for (unsigned k = 1; k < r; ++k) {
      const unsigned q = r - k + 1;
      const long circles = (1L << (2 * k)) - 1;
      if (r <= 4) {
        const std::string expect = "H_0 = Z, H_1 = Z^" + std::to_string(circles);
        out.push_back(
            text_check(dihedral_tag("H_*(E", q, 2 * n) + ")", expect, homology(build_coset_complex(d, q)).to_string()));
      } else {
        out.push_back(value_check(dihedral_tag("chi(E", q, 2 * n) + ")", 1 - circles, euler_characteristic(d, q)));
      }
    }
  }
}

// R_{r-k+1}(D_{2n}) = -(1 - y) Π_{d|k} Φ_d(2y), y = 2^{-s}
void factorization_goldens(std::vector<ReferenceCheck>& out) {
  for (unsigned r = 2; r <= 5; ++r) {
    const std::uint64_t n = std::uint64_t{1} << r;
    const FiniteGroup d = dihedral(2 * n);
    for (unsigned k = 1; k < r; ++k) {
      const unsigned q = r - k + 1;
      const std::string tag = dihedral_tag("R", q, 2 * n);
      std::vector<long> coeffs(k + 2, 0);
      coeffs[0] = 1;
      coeffs[1] -= 1;
      coeffs[k] -= 1L << k;
      coeffs[k + 1] += 1L << k;
      const DP rq = series_rq(d, q);
      out.push_back(series_check(tag, single_prime_series(2, coeffs), rq));
      std::vector<DP> factors{DP::constant(-1), single_prime_series(2, {1, -1})};
      for (unsigned dd = 1; dd <= k; ++dd)
        if (k % dd == 0) factors.push_back(from_single_prime_poly(cyclotomic(dd).scale_argument(2), 2));
      out.push_back({tag + " cyclotomic factorization", verify_factorization(rq, factors), ""});
    }
  }

  const DP es = series_rq(extraspecial32(), 2);
  const std::vector<DP> f{single_prime_series(2, {1, -1}), single_prime_series(2, {1, -2}),
                          single_prime_series(2, {1, 3, -8})};
  out.push_back({"R_2(ES32) = (1-1/2^s)(1-2/2^s)(1+3/2^s-8/4^s)", verify_factorization(es, f), es.to_string()});

  const DP sl = series_rq(make_group("SL(2,4)"), 2);
  out.push_back(series_check("R_2(SL(2,4))", series({{1, 1}, {12, -6}, {15, -5}, {20, -10}, {60, 20}}), sl));
  const IrreducibilityResult res = irreducibility_search(sl);
  out.push_back({"R_2(SL(2,4)) irreducible", res.verdict == Irreducibility::Irreducible,
                 to_string(res.verdict) + " after " + std::to_string(res.candidates) + " candidates"});
}

void symmetric_goldens(std::vector<ReferenceCheck>& out) {
  for (unsigned n = 1; n <= 12; ++n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    out.push_back(value_check("|Hom(Z^2,S" + std::to_string(n) + ")|", f * partition_count(n), hom_count_symmetric(n, 2)));
  }
}

void psl_goldens(std::vector<ReferenceCheck>& out) {
  out.push_back(series_check("psl_series(7)", psl7_golden(), psl_series(7)));
  out.push_back(series_check("psl_series(5)", series({{12, 6}, {15, 5}, {20, 10}, {60, -20}}), psl_series(5)));
}

void stretch_goldens(std::vector<ReferenceCheck>& out) {
  const DP r2 = series_rq(mathieu11(), 2);
  ReferenceCheck c = series_check("R_2(M11) term-for-term", reference_r2_m11(), r2);
  c.stretch = true;
  out.push_back(c);
  const IrreducibilityResult res = irreducibility_search(r2);
  out.push_back({"R_2(M11) irreducible (computed series)", res.verdict == Irreducibility::Irreducible,
                 to_string(res.verdict) + " after " + std::to_string(res.candidates) + " candidates", true});
}

}  // namespace

std::vector<ReferenceCheck> reference_checks(ReferenceTopic topic) {
  std::vector<ReferenceCheck> out;
  switch (topic) {
    case ReferenceTopic::Series: series_goldens(out); break;
    case ReferenceTopic::Mobius: mobius_goldens(out); break;
    case ReferenceTopic::Euler: euler_goldens(out); break;
    case ReferenceTopic::Homology: homology_goldens(out); break;
    case ReferenceTopic::Factorization: factorization_goldens(out); break;
    case ReferenceTopic::Symmetric: symmetric_goldens(out); break;
    case ReferenceTopic::PslClosedForm: psl_goldens(out); break;
    case ReferenceTopic::Stretch: stretch_goldens(out); break;
  }
  return out;
}

std::vector<ReferenceCheck> run_reference_checks(bool include_stretch) {
  std::vector<ReferenceCheck> out;
  for (ReferenceTopic t : {ReferenceTopic::Series, ReferenceTopic::Mobius, ReferenceTopic::Euler,
                           ReferenceTopic::Homology, ReferenceTopic::Factorization, ReferenceTopic::Symmetric,
                           ReferenceTopic::PslClosedForm}) {
    auto part = reference_checks(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (include_stretch) {
    auto part = reference_checks(ReferenceTopic::Stretch);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json to_json(const std::vector<ReferenceCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"stretch", c.stretch}});
  return arr;
}

}  // namespace nilzeta
