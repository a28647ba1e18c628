#include "nilzeta/nilprob.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"

namespace nilzeta {

void LiftPolynomial::add_term(std::uint64_t h, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(h, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LiftPolynomial::eval_at(unsigned s) const {
  mpz_class sum = 0;
  for (const auto& [h, c] : terms_) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), h, s);
    sum += c * pw;
  }
  return sum;
}

nlohmann::json LiftPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [h, c] : terms_) {
    nlohmann::json v = mpz_fits_slong_p(c.get_mpz_t()) ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
    terms.push_back(nlohmann::json::array({h, v}));
  }
  return nlohmann::json{{"terms", terms}};
}

DirichletPolynomial series_from_poset(const NilpotentPoset& poset) {
  if (poset.top_in_family()) return DirichletPolynomial::one();
  DirichletPolynomial d;
  const auto& mu = poset.mobius_to_top();
  for (std::size_t i = 0; i < poset.size(); ++i)
    d.add_term(poset.records()[i].index_in_group, -mpz_class(static_cast<long>(mu[i])));
  return d;
}

DirichletPolynomial series_pq(const FiniteGroup& g, unsigned q, const LatticeOptions& options) {
  if (q < 2) throw Error(ErrorKind::BadInput, "class bound q must be at least 2");
  if (q == 2 ? is_abelian(g) : class_below(g, g.full_mask(), q)) return DirichletPolynomial::one();
  return series_from_poset(build_lattice(g, q, options));
}

DirichletPolynomial series_rq(const FiniteGroup& g, unsigned q, const LatticeOptions& options) {
  return DirichletPolynomial::one() - series_pq(g, q, options);
}

// ------------------------------------------------------------ tuple counts

namespace {

// Subgroups reached while building tuples, with their generators and a
// per-depth memo of completion counts.
class SubgroupTable {
 public:
  SubgroupTable(const FiniteGroup& g, unsigned q, std::uint64_t budget) : g_(g), q_(q), budget_(budget) {
    intern(g.trivial_mask(), {});
  }

  std::size_t intern(const ElementMask& m, std::vector<Elem> gens) {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    Node n;
    n.mask = m;
    n.gens = std::move(gens);
    n.cosets = left_cosets(g_, m).reps;
    n.good = q_ == 0 || class_below(g_, m, q_);
    nodes_.push_back(std::move(n));
    ids_.emplace(m, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  // id of <H, x>
  std::size_t extend(std::size_t h, Elem x) {
    if (nodes_[h].mask.test(x)) return h;
    auto& ext = nodes_[h].ext;
    auto it = ext.find(x);
    if (it != ext.end()) return it->second;
    if (++work_ > budget_)
      throw Error(ErrorKind::BudgetExceeded, "tuple enumeration exceeded " + std::to_string(budget_) + " steps");
    ElementMask k = extend_subgroup(g_, nodes_[h].mask, nodes_[h].gens, x);
    std::vector<Elem> gens = nodes_[h].gens;
    gens.push_back(x);
    const std::size_t id = intern(k, std::move(gens));
    nodes_[h].ext.emplace(x, id);
    return id;
  }

  // s-tuples extending H whose closure has class < q
  mpz_class completions(std::size_t h, unsigned k) {
    if (!nodes_[h].good) return 0;
    if (k == 0) return 1;
    if (nodes_[h].memo.size() < k + 1) nodes_[h].memo.resize(k + 1, mpz_class(-1));
    if (nodes_[h].memo[k] >= 0) return nodes_[h].memo[k];
    mpz_class total = 0;
    const std::vector<Elem> reps = nodes_[h].cosets;
    const unsigned long size = nodes_[h].mask.count();
    for (Elem x : reps) {
      // ⟨H, x⟩ = ⟨H, xh⟩ for h ∈ H
      const std::size_t next = extend(h, x);
      total += completions(next, k - 1) * size;
    }
    nodes_[h].memo[k] = total;
    return total;
  }

  const ElementMask& mask(std::size_t id) const { return nodes_[id].mask; }
  std::size_t size(std::size_t id) const { return nodes_[id].mask.count(); }
  const std::vector<Elem>& cosets(std::size_t id) const { return nodes_[id].cosets; }

 private:
  struct Node {
    ElementMask mask;
    std::vector<Elem> gens;
    std::vector<Elem> cosets;
    bool good = true;
    std::unordered_map<Elem, std::size_t> ext;
    std::vector<mpz_class> memo;
  };
  const FiniteGroup& g_;
  unsigned q_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<ElementMask, std::size_t, ElementMaskHash> ids_;
};

}  // namespace

mpz_class brute_hom_count(const FiniteGroup& g, unsigned q, unsigned s, std::uint64_t budget, unsigned jobs) {
  if (q < 2) throw Error(ErrorKind::BadInput, "class bound q must be at least 2");
  if (s == 0) return 1;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(g.order())));
  std::vector<mpz_class> partial(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      SubgroupTable table(g, q, budget);
      for (Elem x = w; x < g.order(); x += jobs) partial[w] += table.completions(table.extend(0, x), s - 1);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  mpz_class total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

std::vector<std::pair<ElementMask, mpz_class>> tuple_distribution(const FiniteGroup& g, unsigned s,
                                                                  std::uint64_t budget) {
  SubgroupTable table(g, 0, budget);
  std::map<std::size_t, mpz_class> dist{{0, 1}};
  for (unsigned step = 0; step < s; ++step) {
    std::map<std::size_t, mpz_class> next;
    for (const auto& [h, c] : dist) {
      const unsigned long size = table.size(h);
      for (Elem x : table.cosets(h)) next[table.extend(h, x)] += c * size;
    }
    dist = std::move(next);
  }
  std::vector<std::pair<ElementMask, mpz_class>> out;
  for (const auto& [h, c] : dist) out.emplace_back(table.mask(h), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.count() != b.first.count()) return a.first.count() < b.first.count();
    return ElementMask::lex_less(a.first, b.first);
  });
  return out;
}

// ------------------------------------------------------------------ lifts

LiftPolynomial lift_series(const FiniteGroup& g, const ElementMask& n, unsigned q) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw Error(ErrorKind::NotNormal, "N is not a normal subgroup");
  LiftPolynomial phi;
  if (q == 2 ? is_abelian(g) : class_below(g, g.full_mask(), q)) {
    phi.add_term(g.order(), 1);
    return phi;
  }
  const NilpotentPoset p = build_lattice(g, q);
  for (std::size_t i = 0; i < p.size(); ++i)
    phi.add_term(p.records()[i].order, -mpz_class(static_cast<long>(p.mobius_to_top()[i])));
  return phi;
}

ExactRational conditional_probability(const FiniteGroup& g, const ElementMask& n, unsigned q, long s) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw Error(ErrorKind::NotNormal, "N is not a normal subgroup");
  const Quotient qt = quotient(g, n);
  const ExactRational den = series_pq(qt.group, q).eval_at(s);
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "P_q(G/N, s) vanishes at s = " + std::to_string(s));
  ExactRational r = series_pq(g, q).eval_at(s) / den;
  r.canonicalize();
  return r;
}

// --------------------------------------------------------- localizations

DirichletPolynomial localize_p_part(const FiniteGroup& g, unsigned q, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadInput, "p must be prime");
  if (q == 2 ? is_abelian(g) : class_below(g, g.full_mask(), q)) return DirichletPolynomial::one();
  const NilpotentPoset poset = build_lattice(g, q);
  const std::uint64_t full = p_part(g.order(), p);
  DirichletPolynomial d;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& r = poset.records()[i];
    if (p_part(r.order, p) == full) d.add_term(r.index_in_group, -mpz_class(static_cast<long>(poset.mobius_to_top()[i])));
  }
  return d;
}

DirichletPolynomial localize_p_index(const FiniteGroup& g, unsigned q, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadInput, "p must be prime");
  const DirichletPolynomial full = series_pq(g, q);
  DirichletPolynomial d;
  for (const auto& [n, c] : full.terms())
    if (n > 1 && p_part(n, p) == n) d.add_term(n, c);
  return d;
}

mpz_class abelian_p_count(const FiniteGroup& g, std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw Error(ErrorKind::BadInput, "p must be prime");
  const ElementMask pe = p_elements(g, p);
  mpz_class total = 0;
  auto power = [s](std::uint64_t base) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, s);
    return r;
  };
  if (pe.count() == g.order() && is_abelian(g)) return power(g.order());
  LatticeOptions opts;
  opts.element_filter = pe;
  NilpotentPoset poset = enumerate_nq(g, 2, opts);
  const auto& mu = mobius(poset, true);
  for (std::size_t i = 0; i < poset.size(); ++i)
    total -= mpz_class(static_cast<long>(mu[i])) * power(poset.records()[i].order);
  return total;
}

ExactRational abelian_p_probability(const FiniteGroup& g, std::uint64_t p, unsigned s) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), g.order(), s);
  ExactRational r(abelian_p_count(g, p, s), den);
  r.canonicalize();
  return r;
}

mpz_class abelian_p_count_brute(const FiniteGroup& g, std::uint64_t p, unsigned s) {
  const ElementMask pe = p_elements(g, p);
  std::vector<ElementMask> cent(g.order());
  pe.for_each([&](Elem x) {
    const Elem one[] = {x};
    cent[x] = centralizer_of(g, one);
  });
  auto rec = [&](auto&& self, const ElementMask& allowed, unsigned k) -> mpz_class {
    if (k == 0) return 1;
    mpz_class total = 0;
    allowed.for_each([&](Elem x) { total += self(self, allowed & cent[x], k - 1); });
    return total;
  };
  return rec(rec, pe, s);
}

unsigned stabilization_index(const FiniteGroup& g) {
  const NilpotencyClass top = nilpotency_class(g);
  unsigned best = top.is_finite() ? top.value() + 1 : 2;
  const NilpotentPoset p = enumerate_nq(g, 64);
  for (const auto& r : p.records()) best = std::max(best, r.nil_class.value() + 1);
  return std::max(best, 2u);
}

// ------------------------------------------------------------- TC groups

bool is_tc_group(const FiniteGroup& g) {
  const ElementMask z = center(g);
  std::vector<ElementMask> cent(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (z.test(x)) continue;
    const Elem one[] = {x};
    cent[x] = centralizer_of(g, one);
  }
  for (Elem h = 0; h < g.order(); ++h) {
    if (z.test(h)) continue;
    const ElementMask& ch = cent[h];
    bool ok = true;
    ch.for_each([&](Elem x) {
      if (!ok || z.test(x)) return;
      // every noncentral element commuting with h commutes with x
      ch.for_each([&](Elem k) {
        if (ok && !z.test(k) && !cent[x].test(k)) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<ElementMask> maximal_abelian_subgroups_tc(const FiniteGroup& g) {
  const ElementMask z = center(g);
  std::unordered_map<ElementMask, int, ElementMaskHash> seen;
  std::vector<ElementMask> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (z.test(x)) continue;
    const Elem one[] = {x};
    ElementMask c = centralizer_of(g, one);
    if (seen.emplace(c, 0).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ElementMask& a, const ElementMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementMask::lex_less(a, b);
  });
  return out;
}

DirichletPolynomial tc_series(const FiniteGroup& g) {
  if (is_abelian(g)) return DirichletPolynomial::one();
  if (!is_tc_group(g)) throw Error(ErrorKind::NotTCGroup, g.name() + " is not a TC-group");
  const std::vector<ElementMask> ms = maximal_abelian_subgroups_tc(g);
  const std::size_t zc = center(g).count();
  DirichletPolynomial d;
  d.add_term(g.order() / zc, 1 - static_cast<long>(ms.size()));
  for (const auto& m : ms) d.add_term(g.order() / m.count(), 1);
  return d;
}

DirichletPolynomial psl_series(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) throw Error(ErrorKind::BadInput, "psl_series needs a prime p > 3");
  const std::uint64_t q = (p - 1) / 2, r = (p + 1) / 2;
  const std::uint64_t pqr = p * q * r;
  // pqr is divisible by 6: one of q, r is even and 3 divides q or r
  DirichletPolynomial d;
  d.add_term(2 * q * r, static_cast<long>(p + 1));
  d.add_term(2 * p * r, static_cast<long>(p * r));
  d.add_term(2 * p * q, static_cast<long>(p * q));
  d.add_term(pqr / 2, static_cast<long>(pqr / 6));
  d.add_term(pqr, -static_cast<long>(pqr / 2));
  d.add_term(2 * pqr, -(static_cast<long>(p + p * r + p * q) - static_cast<long>(pqr / 3)));
  return d;
}

}  // namespace nilzeta
