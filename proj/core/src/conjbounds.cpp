#include "nilzeta/conjbounds.hpp"

#include <numeric>

#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/nilprob.hpp"

namespace nilzeta {

namespace {

mpz_class pow_ui(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpz_class order_of(const FiniteGroup& g) { return mpz_class(static_cast<unsigned long>(g.order())); }

ExactRational p2(const FiniteGroup& g, unsigned n) { return series_pq(g, 2).eval_at(static_cast<long>(n)); }

ExactRational ratio(const mpz_class& a, const mpz_class& b) {
  ExactRational r(a, b);
  r.canonicalize();
  return r;
}

BoundComparison leq(std::string label, const ExactRational& lhs, const ExactRational& rhs) {
  BoundComparison c;
  c.label = std::move(label);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = "<=";
  c.holds = lhs <= rhs;
  c.margin = rhs - lhs;
  return c;
}

void require_nonabelian(const FiniteGroup& g) {
  if (is_abelian(g)) throw Error(ErrorKind::GroupIsAbelian, g.name() + " is abelian");
}

nlohmann::json rational_json(const ExactRational& q) { return q.get_str(); }

}  // namespace

mpz_class k_count(const FiniteGroup& g, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  const ExactRational v = p2(g, n + 1) * pow_ui(order_of(g), n);
  if (v.get_den() != 1) throw std::logic_error("k_n is not an integer");
  return v.get_num();
}

mpz_class k_count_mobius(const FiniteGroup& g, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  const mpz_class hom = lift_series(g, g.trivial_mask(), 2).eval_at(n + 1);
  if (!mpz_divisible_p(hom.get_mpz_t(), order_of(g).get_mpz_t())) throw std::logic_error("k_n is not an integer");
  return hom / order_of(g);
}

mpz_class k_count_brute(const FiniteGroup& g, unsigned n, std::uint64_t budget) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  std::uint64_t work = 0;
  // A tuple is least in its orbit iff each entry is least in its class under
  // the centralizer of the entries before it.
  auto rec = [&](auto&& self, const ElementMask& allowed, const std::vector<Elem>& stab, unsigned k) -> mpz_class {
    if (k == 0) return 1;
    mpz_class total = 0;
    allowed.for_each([&](Elem x) {
      std::vector<Elem> next;
      bool least = true;
      for (Elem s : stab) {
        if (++work > budget)
          throw Error(ErrorKind::BudgetExceeded, "orbit count exceeded " + std::to_string(budget) + " steps");
        const Elem y = g.conj(s, x);
        if (y < x) {
          least = false;
          break;
        }
        if (y == x) next.push_back(s);
      }
      if (!least) return;
      ElementMask inside(g.order());
      for (Elem s : next) inside.set(s);
      total += self(self, allowed & inside, next, k - 1);
    });
    return total;
  };
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return rec(rec, g.full_mask(), all, n);
}

KCountRoutes k_count_routes(const FiniteGroup& g, unsigned n, bool run_brute, std::uint64_t budget) {
  KCountRoutes r;
  r.series = k_count(g, n);
  r.mobius = k_count_mobius(g, n);
  if (run_brute) {
    try {
      r.brute = k_count_brute(g, n, budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }
  return r;
}

// ----------------------------------------------------------------- reports

bool BoundReport::holds() const {
  for (const auto& c : comparisons)
    if (!c.holds) return false;
  return true;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : parameters) params[k] = v.get_str();
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : comparisons)
    comps.push_back({{"label", c.label},
                     {"lhs", rational_json(c.lhs)},
                     {"rhs", rational_json(c.rhs)},
                     {"relation", c.relation},
                     {"holds", c.holds},
                     {"margin", rational_json(c.margin)}});
  return {{"name", name}, {"group", group}, {"n", n}, {"parameters", params}, {"comparisons", comps}, {"holds", holds()}};
}

BoundReport check_subgroup_bounds(const FiniteGroup& g, const ElementMask& h, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  if (!is_subgroup(g, h)) throw Error(ErrorKind::BadInput, "H is not a subgroup");
  const FiniteGroup sub = induced_subgroup(g, h).group;
  const mpz_class idx = order_of(g) / order_of(sub);
  BoundReport r{"subgroup", g.name(), n, {{"index", idx}, {"subgroup_order", order_of(sub)}}, {}};
  const ExactRational pg = p2(g, n), ph = p2(sub, n);
  r.comparisons.push_back(leq("|G:H|^(-2n) P_2(H,n) <= P_2(G,n)", ph / pow_ui(idx, 2 * n), pg));
  r.comparisons.push_back(leq("P_2(G,n) <= P_2(H,n)", pg, ph));
  const mpz_class kg = k_count(g, n), kh = k_count(sub, n);
  r.comparisons.push_back(leq("|G:H|^(-1) k_n(H) <= k_n(G)", ratio(kh, idx), ExactRational(kg)));
  r.comparisons.push_back(leq("k_n(G) <= |G:H|^n k_n(H)", ExactRational(kg), ExactRational(pow_ui(idx, n) * kh)));
  return r;
}

BoundReport check_quotient_bound(const FiniteGroup& g, const ElementMask& normal, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  if (!is_subgroup(g, normal) || !is_normal(g, normal)) throw Error(ErrorKind::NotNormal, "N is not a normal subgroup");
  const FiniteGroup quo = quotient(g, normal).group;
  const FiniteGroup nn = induced_subgroup(g, normal).group;
  BoundReport r{"quotient", g.name(), n, {{"normal_order", order_of(nn)}}, {}};
  r.comparisons.push_back(leq("P_2(G,n) <= P_2(G/N,n) P_2(N,n)", p2(g, n), p2(quo, n) * p2(nn, n)));
  r.comparisons.push_back(
      leq("k_n(G) <= k_n(G/N) k_n(N)", ExactRational(k_count(g, n)), ExactRational(k_count(quo, n) * k_count(nn, n))));
  return r;
}

BoundReport check_centralizer_bound(const FiniteGroup& g, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  require_nonabelian(g);
  const ElementMask z = center(g);
  std::size_t c = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (z.test(x)) continue;
    const Elem one[] = {x};
    c = std::max(c, centralizer_of(g, one).count());
  }
  const std::uint64_t p = prime_divisors(g.order() / z.count()).front();
  const mpz_class pz(static_cast<unsigned long>(p)), cz(static_cast<unsigned long>(c));
  mpz_class geom = 0;
  for (unsigned k = 0; k <= n; ++k) geom += pow_ui(pz, k);
  const ExactRational bound = ratio(geom * pow_ui(cz, n), pow_ui(pz, n) * pow_ui(order_of(g), n));
  BoundReport r{"centralizer", g.name(), n, {{"c", cz}, {"p", pz}}, {}};
  r.comparisons.push_back(leq("P_2(G,n+1) <= (p^n+...+1) c^n / (p^n |G|^n)", p2(g, n + 1), bound));
  return r;
}

BoundReport check_center_bounds(const FiniteGroup& g, unsigned n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be at least 1");
  require_nonabelian(g);
  const std::size_t m = g.order() / center(g).count();
  const std::uint64_t p = prime_divisors(m).front();
  const mpz_class mz(static_cast<unsigned long>(m)), pz(static_cast<unsigned long>(p)), nz(n);
  const ExactRational value = p2(g, n + 1);
  BoundReport r{"center", g.name(), n, {{"m", mz}, {"p", pz}}, {}};
  r.comparisons.push_back(leq("(mn+m-n)/m^(n+1) <= P_2(G,n+1)", ratio(mz * nz + mz - nz, pow_ui(mz, n + 1)), value));
  r.comparisons.push_back(
      leq("P_2(G,n+1) <= (p^(n+1)+p^n-1)/p^(2n+1)", value, ratio(pow_ui(pz, n + 1) + pow_ui(pz, n) - 1, pow_ui(pz, 2 * n + 1))));
  const mpz_class two = 2;
  r.comparisons.push_back(
      leq("P_2(G,n+1) <= (3*2^n-1)/2^(2n+1)", value, ratio(3 * pow_ui(two, n) - 1, pow_ui(two, 2 * n + 1))));
  return r;
}

BoundReport check_congruence(const FiniteGroup& g, unsigned n) {
  if (n < 2) throw Error(ErrorKind::BadInput, "the congruence needs n >= 2");
  mpz_class d = 0;
  for (std::uint64_t p : prime_divisors(g.order())) d = gcd(d, pow_ui(mpz_class(static_cast<unsigned long>(p)), n) - 1);
  const mpz_class k = k_count(g, n - 1);
  const mpz_class target = pow_ui(order_of(g), n - 1);
  BoundReport r{"congruence", g.name(), n, {{"D_n", d}}, {}};
  BoundComparison c;
  c.label = "k_(n-1)(G) == |G|^(n-1) mod D_n";
  c.relation = "==";
  if (d == 0) {
    // no prime divisors: the trivial group, congruence read as equality
    c.lhs = k;
    c.rhs = target;
    c.margin = k - target;
  } else {
    mpz_class a, b, diff;
    mpz_fdiv_r(a.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), target.get_mpz_t(), d.get_mpz_t());
    const mpz_class delta = k - target;
    mpz_fdiv_r(diff.get_mpz_t(), delta.get_mpz_t(), d.get_mpz_t());
    c.lhs = a;
    c.rhs = b;
    c.margin = diff;
  }
  c.holds = c.margin == 0;
  r.comparisons.push_back(std::move(c));
  return r;
}

}  // namespace nilzeta
