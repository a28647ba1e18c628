#include "nilzeta/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilzeta/conjbounds.hpp"
#include "nilzeta/dirichlet.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta/families.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/lattice.hpp"
#include "nilzeta/nilprob.hpp"
#include "nilzeta/reference.hpp"
#include "nilzeta/symfunc.hpp"
#include "nilzeta/topology.hpp"

namespace nilzeta::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string group;
  unsigned q = 2;
  long s = 1;
  bool s_given = false;
  unsigned n = 1;
  std::uint64_t p = 2;
  std::string format = "json";
  std::string mode = "part";
  std::string normal;
  std::string route = "a";
  int max_dim = -1;
  bool brute = false;
  bool complex = false;
  bool stretch = false;
  unsigned jobs = 1;
  std::size_t order_cap = kDefaultOrderCap;
  std::uint64_t budget = kDefaultTupleBudget;
  std::string out_path;
};

json big(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

json header(const std::string& command) { return {{"schema", "nilzeta/1"}, {"command", command}}; }

json group_json(const FiniteGroup& g) { return {{"name", g.name()}, {"order", g.order()}}; }

json series_json(const DirichletPolynomial& d) {
  json j = d.to_json();
  j["text"] = d.to_string();
  return j;
}

unsigned positive_s(const Options& o) {
  if (o.s < 1) throw Error(ErrorKind::BadInput, "--s must be at least 1 here");
  return static_cast<unsigned>(o.s);
}

ElementMask parse_normal(const FiniteGroup& g, const std::string& spec) {
  if (spec == "center") return center(g);
  if (spec == "derived") return commutator_subgroup(g, g.full_mask(), g.full_mask());
  if (spec == "trivial") return g.trivial_mask();
  if (spec == "whole") return g.full_mask();
  std::vector<Elem> elems;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::BadInput, "bad --normal entry '" + item + "'");
    const unsigned long v = std::stoul(item);
    if (v >= g.order()) throw Error(ErrorKind::BadInput, "element index " + item + " out of range");
    elems.push_back(static_cast<Elem>(v));
  }
  if (elems.empty()) throw Error(ErrorKind::BadInput, "empty --normal");
  return closure(g, elems);
}

std::optional<std::uint64_t> single_prime(const DirichletPolynomial& d) {
  std::set<std::uint64_t> primes;
  for (const auto& t : d.terms())
    for (std::uint64_t p : prime_divisors(t.first)) primes.insert(p);
  if (primes.size() == 1) return *primes.begin();
  return std::nullopt;
}

int cmd_series(const Options& o, json& doc, std::string& text) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const DirichletPolynomial p = series_pq(g, o.q);
  if (o.format == "latex") {
    text = p.to_latex() + "\n";
    return kOk;
  }
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["terms"] = p.to_json()["terms"];
  doc["text"] = p.to_string();
  doc["latex"] = p.to_latex();
  return kOk;
}

int cmd_eval(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const ExactRational v = series_pq(g, o.q).eval_at(o.s);
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["s"] = o.s;
  doc["value"] = v.get_str();
  if (o.s >= 1) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), g.order(), static_cast<unsigned long>(o.s));
    const ExactRational count = v * pw;
    doc["tuples"] = big(count.get_num());
  }
  return kOk;
}

int cmd_euler(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const EulerRoutes r = euler_routes(g, o.q);
  const bool agree = r.series == r.lattice && r.series == r.crosscut;
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["chi"] = big(r.series);
  doc["routes"] = {{"series", big(r.series)}, {"lattice", big(r.lattice)}, {"crosscut", big(r.crosscut)}};
  doc["agree"] = agree;
  return agree ? kOk : kMismatch;
}

int cmd_homology(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const CosetComplex c = build_coset_complex(g, o.q);
  HomologySummary h = homology(c);
  if (o.max_dim >= 0 && h.groups.size() > static_cast<std::size_t>(o.max_dim) + 1)
    h.groups.resize(static_cast<std::size_t>(o.max_dim) + 1);
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  json f = json::array();
  for (const auto& layer : c.simplices()) f.push_back(layer.size());
  doc["f_vector"] = f;
  doc["homology"] = h.to_json()["groups"];
  doc["text"] = h.to_string();
  doc["euler_characteristic"] = big(c.euler_characteristic());
  if (o.complex) doc["complex"] = c.to_json();
  return kOk;
}

int cmd_count_hom(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const unsigned s = positive_s(o);
  const ExactRational v = series_pq(g, o.q).eval_at(static_cast<long>(s));
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), g.order(), s);
  const mpz_class count = ExactRational(v * pw).get_num();
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["s"] = s;
  doc["count"] = big(count);
  if (o.brute) {
    const mpz_class b = brute_hom_count(g, o.q, s, o.budget, o.jobs);
    doc["brute"] = big(b);
    doc["agree"] = b == count;
    if (b != count) return kMismatch;
  }
  return kOk;
}

int cmd_sym(const Options& o, json& doc) {
  const unsigned s = positive_s(o);
  doc["n"] = o.n;
  doc["s"] = s;
  doc["count"] = big(hom_count_symmetric(o.n, s));
  return kOk;
}

int cmd_knum(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  if (o.n < 1) throw Error(ErrorKind::BadInput, "--n must be at least 1");
  mpz_class k;
  if (o.route == "a")
    k = k_count(g, o.n);
  else if (o.route == "b")
    k = k_count_mobius(g, o.n);
  else if (o.route == "c")
    k = k_count_brute(g, o.n);
  else
    throw Error(ErrorKind::BadInput, "--route must be a, b or c");
  doc["group"] = group_json(g);
  doc["n"] = o.n;
  doc["route"] = o.route;
  doc["k"] = big(k);
  return kOk;
}

int cmd_bounds(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  if (o.n < 1) throw Error(ErrorKind::BadInput, "--n must be at least 1");
  std::vector<BoundReport> reports;
  const NilpotentPoset abelian = enumerate_nq(g, 2);
  for (const auto& r : abelian.records())
    if (r.is_maximal) reports.push_back(check_subgroup_bounds(g, r.mask, o.n));
  reports.push_back(check_quotient_bound(g, center(g), o.n));
  reports.push_back(check_quotient_bound(g, commutator_subgroup(g, g.full_mask(), g.full_mask()), o.n));
  if (!is_abelian(g)) {
    reports.push_back(check_centralizer_bound(g, o.n));
    reports.push_back(check_center_bounds(g, o.n));
  }
  if (o.n >= 2) reports.push_back(check_congruence(g, o.n));
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.holds();
    arr.push_back(r.to_json());
  }
  doc["group"] = group_json(g);
  doc["n"] = o.n;
  doc["reports"] = arr;
  doc["holds"] = ok;
  return ok ? kOk : kMismatch;
}

int cmd_factor(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const DirichletPolynomial r = series_rq(g, o.q);
  const IrreducibilityResult res = irreducibility_search(r);
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["r"] = series_json(r);
  doc["verdict"] = to_string(res.verdict);
  doc["candidates"] = res.candidates;
  doc["detail"] = res.detail;
  json fs = json::array();
  for (const auto& f : res.factors) fs.push_back(series_json(f));
  doc["factors"] = fs;
  if (const auto p = single_prime(r); p && !r.is_zero()) {
    json sp = json::array();
    for (const auto& f : factor_single_prime(r, *p)) sp.push_back(series_json(f));
    doc["single_prime"] = {{"p", *p}, {"factors", sp}};
  }
  return kOk;
}

int cmd_localize(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["p"] = o.p;
  doc["mode"] = o.mode;
  if (o.mode == "part") {
    doc["series"] = series_json(localize_p_part(g, o.q, o.p));
  } else if (o.mode == "index") {
    doc["series"] = series_json(localize_p_index(g, o.q, o.p));
  } else if (o.mode == "padic") {
    if (!o.s_given) throw Error(ErrorKind::BadInput, "--mode padic needs --s");
    const unsigned s = positive_s(o);
    doc["s"] = s;
    doc["count"] = big(abelian_p_count(g, o.p, s));
    doc["probability"] = abelian_p_probability(g, o.p, s).get_str();
  } else {
    throw Error(ErrorKind::BadInput, "--mode must be part, index or padic");
  }
  return kOk;
}

int cmd_lift(const Options& o, json& doc) {
  const FiniteGroup g = make_group(o.group, o.order_cap);
  const unsigned s = positive_s(o);
  const ElementMask n = parse_normal(g, o.normal);
  const LiftPolynomial phi = lift_series(g, n, o.q);
  doc["group"] = group_json(g);
  doc["q"] = o.q;
  doc["s"] = s;
  doc["normal"] = {{"order", n.count()}, {"elements", n.elements()}};
  doc["phi"] = phi.to_json();
  doc["phi_value"] = big(phi.eval_at(s));
  try {
    doc["conditional_probability"] = conditional_probability(g, n, o.q, static_cast<long>(s)).get_str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroDenominator) throw;
    doc["conditional_probability"] = nullptr;
  }
  return kOk;
}

int cmd_verify(const Options& o, json& doc) {
  const auto checks = run_reference_checks(o.stretch);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  doc["checks"] = to_json(checks);
  doc["passed"] = checks.size() - failed;
  doc["failed"] = failed;
  return failed ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"nilzeta: nilpotent tuple probabilities and coset complexes of finite groups", "nilzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "worker threads for brute-force counts")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out_path, "write the result to this file");
  app.add_option("--order-cap", o.order_cap, "largest group order accepted");
  app.add_option("--budget", o.budget, "step budget for tuple enumeration");

  auto group_opt = [&](CLI::App* sub) { sub->add_option("--group", o.group, "group spec, e.g. S4, D16, ES32")->required(); };
  auto class_opt = [&](CLI::App* sub) { sub->add_option("--class", o.q, "class bound q")->required()->check(CLI::Range(2u, 1000u)); };
  auto s_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--s", o.s, "integer argument s");
    if (required) opt->required();
    return opt;
  };

  auto* series = app.add_subcommand("series", "P_q(G,s) as a Dirichlet polynomial");
  group_opt(series);
  class_opt(series);
  series->add_option("--format", o.format)->check(CLI::IsMember({"json", "latex"}));

  auto* eval = app.add_subcommand("eval", "P_q(G,s) at an integer s");
  group_opt(eval);
  class_opt(eval);
  s_opt(eval, true);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of E(q,G)");
  group_opt(euler);
  class_opt(euler);

  auto* hom = app.add_subcommand("homology", "integral homology of the coset complex");
  group_opt(hom);
  class_opt(hom);
  hom->add_option("--max-dim", o.max_dim);
  hom->add_flag("--complex", o.complex, "include the complex itself");

  auto* count = app.add_subcommand("count-hom", "tuples generating a subgroup of class < q");
  group_opt(count);
  class_opt(count);
  s_opt(count, true);
  count->add_flag("--brute", o.brute, "also count by enumeration");

  auto* sym = app.add_subcommand("sym", "commuting s-tuples in S_n");
  sym->add_option("--n", o.n)->required();
  s_opt(sym, true);

  auto* knum = app.add_subcommand("knum", "conjugacy classes of commuting n-tuples");
  group_opt(knum);
  knum->add_option("--n", o.n)->required();
  knum->add_option("--route", o.route)->check(CLI::IsMember({"a", "b", "c"}));

  auto* bounds = app.add_subcommand("bounds", "check the commuting-probability bounds and congruence");
  group_opt(bounds);
  bounds->add_option("--n", o.n)->required();

  auto* factor = app.add_subcommand("factor", "factor R_q(G,s)");
  group_opt(factor);
  class_opt(factor);

  auto* localize = app.add_subcommand("localize", "localizations of P_q at a prime");
  group_opt(localize);
  class_opt(localize);
  localize->add_option("--p", o.p)->required();
  localize->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"part", "index", "padic"}));
  auto* ls = s_opt(localize, false);

  auto* lift = app.add_subcommand("lift", "lifts of q-nilpotent tuples through G -> G/N");
  group_opt(lift);
  class_opt(lift);
  lift->add_option("--normal", o.normal, "center|derived|trivial|whole or element indices 1,2,...")->required();
  s_opt(lift, true);

  auto* verify = app.add_subcommand("verify-paper", "replay the stored reference values");
  verify->add_flag("--include-stretch", o.stretch, "also run the M11 items");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  o.s_given = ls->count() > 0;

  json doc;
  std::string text;
  int code = kOk;
  try {
    auto* sub = app.get_subcommands().front();
    doc = header(sub->get_name());
    const std::string name = sub->get_name();
    if (name == "series") code = cmd_series(o, doc, text);
    else if (name == "eval") code = cmd_eval(o, doc);
    else if (name == "euler") code = cmd_euler(o, doc);
    else if (name == "homology") code = cmd_homology(o, doc);
    else if (name == "count-hom") code = cmd_count_hom(o, doc);
    else if (name == "sym") code = cmd_sym(o, doc);
    else if (name == "knum") code = cmd_knum(o, doc);
    else if (name == "bounds") code = cmd_bounds(o, doc);
    else if (name == "factor") code = cmd_factor(o, doc);
    else if (name == "localize") code = cmd_localize(o, doc);
    else if (name == "lift") code = cmd_lift(o, doc);
    else if (name == "verify-paper") code = cmd_verify(o, doc);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::OrderCapExceeded:
        return kBudget;
      default:
        return kBadInput;
    }
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kMismatch;
  }

  if (text.empty()) text = doc.dump(2) + "\n";
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return kBadInput;
    }
    f << text;
  } else {
    out << text;
  }
  if (code == kMismatch) err << "verification mismatch\n";
  return code;
}

}  // namespace nilzeta::cli
