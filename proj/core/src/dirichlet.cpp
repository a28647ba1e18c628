#include "nilzeta/dirichlet.hpp"

#include <algorithm>
#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta {

namespace {

nlohmann::json big_to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

mpz_class big_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  throw Error(ErrorKind::BadInput, "coefficient must be an integer or a decimal string");
}

mpz_class big_from_u64(std::uint64_t n) { return mpz_class(static_cast<unsigned long>(n)); }

}  // namespace

DirichletPolynomial::DirichletPolynomial(const Terms& terms) {
  for (const auto& [n, c] : terms) add_term(n, c);
}

DirichletPolynomial DirichletPolynomial::constant(const mpz_class& c) { return term(1, c); }

DirichletPolynomial DirichletPolynomial::term(std::uint64_t n, const mpz_class& c) {
  DirichletPolynomial d;
  d.add_term(n, c);
  return d;
}

mpz_class DirichletPolynomial::coeff(std::uint64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void DirichletPolynomial::add_term(std::uint64_t n, const mpz_class& c) {
  if (n == 0) throw Error(ErrorKind::BadInput, "Dirichlet indices start at 1");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(n, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DirichletPolynomial DirichletPolynomial::operator+(const DirichletPolynomial& o) const {
  DirichletPolynomial r = *this;
  for (const auto& [n, c] : o.terms_) r.add_term(n, c);
  return r;
}

DirichletPolynomial DirichletPolynomial::operator-(const DirichletPolynomial& o) const {
  DirichletPolynomial r = *this;
  for (const auto& [n, c] : o.terms_) r.add_term(n, -c);
  return r;
}

DirichletPolynomial DirichletPolynomial::operator-() const {
  DirichletPolynomial r = *this;
  for (auto& [n, c] : r.terms_) c = -c;
  return r;
}

DirichletPolynomial DirichletPolynomial::operator*(const DirichletPolynomial& o) const {
  DirichletPolynomial r;
  for (const auto& [n, a] : terms_)
    for (const auto& [m, b] : o.terms_) {
      std::uint64_t nm;
      if (__builtin_mul_overflow(n, m, &nm)) throw Error(ErrorKind::BadInput, "Dirichlet index overflow");
      r.add_term(nm, a * b);
    }
  return r;
}

ExactRational DirichletPolynomial::eval_at(long s) const {
  ExactRational sum = 0;
  const unsigned long e = static_cast<unsigned long>(s < 0 ? -s : s);
  for (const auto& [n, c] : terms_) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), big_from_u64(n).get_mpz_t(), e);
    if (s <= 0)
      sum += ExactRational(c * pw);
    else
      sum += ExactRational(c, pw);
  }
  sum.canonicalize();
  return sum;
}

std::string DirichletPolynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const mpz_class a = abs(c);
    if (n == 1)
      out << a.get_str();
    else
      out << "\\frac{" << a.get_str() << "}{" << n << "^s}";
  }
  return out.str();
}

std::string DirichletPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    out << mpz_class(abs(c)).get_str();
    if (n != 1) out << "/" << n << "^s";
  }
  return out.str();
}

nlohmann::json DirichletPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [n, c] : terms_) terms.push_back(nlohmann::json::array({n, big_to_json(c)}));
  return nlohmann::json{{"terms", terms}};
}

DirichletPolynomial DirichletPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw Error(ErrorKind::BadInput, "expected {\"terms\": [[n, a_n], ...]}");
  DirichletPolynomial d;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned())
      throw Error(ErrorKind::BadInput, "each term must be [n, a_n] with n >= 1");
    d.add_term(t[0].get<std::uint64_t>(), big_from_json(t[1]));
  }
  return d;
}

bool verify_factorization(const DirichletPolynomial& product, const std::vector<DirichletPolynomial>& factors) {
  DirichletPolynomial acc = DirichletPolynomial::one();
  for (const auto& f : factors) acc = acc * f;
  return acc == product;
}

// ------------------------------------------------------------ single prime

IntPoly to_single_prime_poly(const DirichletPolynomial& a, std::uint64_t p) {
  if (p < 2) throw Error(ErrorKind::BadInput, "p must be a prime");
  std::vector<mpz_class> coeffs;
  for (const auto& [n, c] : a.terms()) {
    std::uint64_t m = n;
    std::size_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1)
      throw Error(ErrorKind::UnsupportedSupport,
                  "index " + std::to_string(n) + " is not a power of " + std::to_string(p));
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = c;
  }
  return IntPoly(std::move(coeffs));
}

DirichletPolynomial from_single_prime_poly(const IntPoly& f, std::uint64_t p) {
  DirichletPolynomial d;
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0 && __builtin_mul_overflow(n, p, &n)) throw Error(ErrorKind::BadInput, "Dirichlet index overflow");
    d.add_term(n, f.coeffs()[k]);
  }
  return d;
}

namespace {

// sign making the coefficient at the smallest index positive
IntPoly low_positive(const IntPoly& f) {
  for (const auto& c : f.coeffs())
    if (c != 0) return c < 0 ? -f : f;
  return f;
}

}  // namespace

std::vector<DirichletPolynomial> factor_single_prime(const DirichletPolynomial& a, std::uint64_t p) {
  if (a.is_zero()) throw Error(ErrorKind::BadInput, "cannot factor the zero series");
  const IntPoly f = to_single_prime_poly(a, p);
  if (f.degree() == 0) return {a};
  std::vector<IntPoly> parts = factor_kronecker(f);
  for (auto& g : parts) g = low_positive(g);
  std::sort(parts.begin(), parts.end(), poly_less);
  IntPoly prod = IntPoly::constant(1);
  for (const auto& g : parts) prod = prod * g;
  IntPoly unit;
  if (!divides(prod, f, &unit) || unit.degree() != 0)
    throw Error(ErrorKind::BadInput, "factorization does not reproduce the input");
  std::vector<DirichletPolynomial> out;
  if (unit.lead() != 1) out.push_back(DirichletPolynomial::constant(unit.lead()));
  for (const auto& g : parts) out.push_back(from_single_prime_poly(g, p));
  return out;
}

// ---------------------------------------------------------- irreducibility

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible:
      return "irreducible";
    case Irreducibility::Factored:
      return "factored";
    case Irreducibility::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<std::uint64_t> index_primes(const DirichletPolynomial& a) {
  std::vector<std::uint64_t> ps;
  for (const auto& [n, c] : a.terms()) {
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        ps.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) ps.push_back(m);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

std::vector<unsigned> exponents(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  std::vector<unsigned> e(primes.size(), 0);
  for (std::size_t j = 0; j < primes.size(); ++j)
    while (n % primes[j] == 0) {
      n /= primes[j];
      ++e[j];
    }
  return e;
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, b, &r)) throw Error(ErrorKind::BadInput, "Dirichlet index overflow");
  return r;
}

IrreducibilityResult factored(std::vector<DirichletPolynomial> fs, std::uint64_t candidates, std::string detail) {
  IrreducibilityResult r;
  r.verdict = Irreducibility::Factored;
  r.factors = std::move(fs);
  r.candidates = candidates;
  r.detail = std::move(detail);
  return r;
}

bool is_prime_int(const mpz_class& c) { return mpz_probab_prime_p(c.get_mpz_t(), 30) > 0; }

}  // namespace

IrreducibilityResult irreducibility_search(const DirichletPolynomial& a, std::uint64_t budget) {
  IrreducibilityResult res;
  if (a.is_zero() || (a.size() == 1 && a.terms().begin()->first == 1 && abs(a.terms().begin()->second) == 1)) {
    res.detail = "zero or a unit";
    return res;
  }

  // integer content
  mpz_class content = 0;
  for (const auto& [n, c] : a.terms()) content = gcd(content, c);
  if (a.size() == 1 && a.terms().begin()->first == 1) {
    if (is_prime_int(content)) {
      res.verdict = Irreducibility::Irreducible;
      res.detail = "prime constant";
      return res;
    }
    const mpz_class c = a.terms().begin()->second;
    mpz_class d = 2;
    while (!mpz_divisible_p(content.get_mpz_t(), d.get_mpz_t())) ++d;
    return factored({DirichletPolynomial::constant(d), DirichletPolynomial::constant(c / d)}, 0,
                    "composite constant");
  }
  if (content != 1) {
    DirichletPolynomial rest;
    for (const auto& [n, c] : a.terms()) rest.add_term(n, c / content);
    return factored({DirichletPolynomial::constant(content), rest}, 0, "integer content");
  }

  const std::vector<std::uint64_t> primes = index_primes(a);
  const std::size_t k = primes.size();
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> lo(k, ~0u), hi(k, 0);
  for (const auto& [n, c] : a.terms()) {
    exps.push_back(exponents(n, primes));
    for (std::size_t j = 0; j < k; ++j) {
      lo[j] = std::min(lo[j], exps.back()[j]);
      hi[j] = std::max(hi[j], exps.back()[j]);
    }
  }

  // monomial content
  std::uint64_t mono = 1;
  for (std::size_t j = 0; j < k; ++j) mono *= checked_pow(primes[j], lo[j]);
  if (mono != 1) {
    if (a.size() == 1) {
      // ±x_p alone is irreducible; a longer monomial splits off one variable
      unsigned total = 0;
      for (std::size_t j = 0; j < k; ++j) total += lo[j];
      if (total == 1) {
        res.verdict = Irreducibility::Irreducible;
        res.detail = "single variable";
        return res;
      }
      const std::uint64_t p0 = primes[std::find_if(lo.begin(), lo.end(), [](unsigned e) { return e > 0; }) - lo.begin()];
      return factored({DirichletPolynomial::term(p0, 1), DirichletPolynomial::term(mono / p0, a.terms().begin()->second)},
                      0, "monomial");
    }
    DirichletPolynomial rest;
    for (const auto& [n, c] : a.terms()) rest.add_term(n / mono, c);
    return factored({DirichletPolynomial::term(mono, 1), rest}, 0, "monomial content");
  }

  // Kronecker substitution x_j -> y^{D_j}
  std::vector<std::uint64_t> radix(k, 1);
  for (std::size_t j = 1; j < k; ++j)
    if (__builtin_mul_overflow(radix[j - 1], hi[j - 1] + 1ULL, &radix[j]))
      throw Error(ErrorKind::BadInput, "degree box too large");
  std::uint64_t span = 1;
  for (std::size_t j = 0; j < k; ++j) span *= hi[j] + 1ULL;
  if (span > 20000) throw Error(ErrorKind::BadInput, "degree box too large for the univariate image");
  std::vector<mpz_class> coeffs(span, 0);
  {
    std::size_t t = 0;
    for (const auto& [n, c] : a.terms()) {
      std::uint64_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) pos += exps[t][j] * radix[j];
      coeffs[pos] = c;
      ++t;
    }
  }
  const IntPoly image(coeffs);
  const std::vector<IntPoly> parts = factor_zassenhaus(image);

  // group equal factors
  std::vector<IntPoly> distinct;
  std::vector<unsigned> mult;
  for (const auto& f : parts) {
    if (!distinct.empty() && distinct.back() == f)
      ++mult.back();
    else {
      distinct.push_back(f);
      mult.push_back(1);
    }
  }
  const mpz_class sign = image.lead() < 0 ? -1 : 1;

  auto back = [&](const IntPoly& g, DirichletPolynomial* out) {
    DirichletPolynomial d;
    for (std::size_t pos = 0; pos < g.coeffs().size(); ++pos) {
      if (g.coeffs()[pos] == 0) continue;
      std::uint64_t rem = pos, n = 1;
      for (std::size_t j = k; j-- > 0;) {
        const std::uint64_t e = rem / radix[j];
        rem %= radix[j];
        if (e > hi[j]) return false;
        n *= checked_pow(primes[j], static_cast<unsigned>(e));
      }
      d.add_term(n, g.coeffs()[pos]);
    }
    *out = d;
    return true;
  };

  std::vector<unsigned> pick(distinct.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] > mult[i]) pick[i++] = 0;
    if (i == pick.size()) break;
    bool full = true;
    for (std::size_t j = 0; j < pick.size(); ++j) full = full && pick[j] == mult[j];
    if (full) continue;
    if (res.candidates >= budget) {
      res.detail = "budget exhausted after " + std::to_string(res.candidates) + " candidates";
      return res;
    }
    ++res.candidates;
    IntPoly g = IntPoly::constant(1), h = IntPoly::constant(sign);
    for (std::size_t j = 0; j < pick.size(); ++j)
      for (unsigned e = 0; e < mult[j]; ++e) {
        if (e < pick[j])
          g = g * distinct[j];
        else
          h = h * distinct[j];
      }
    DirichletPolynomial dg, dh;
    if (!back(g, &dg) || !back(h, &dh)) continue;
    if (dg * dh == a) {
      if (dg.terms().begin()->second < 0) {
        dg = -dg;
        dh = -dh;
      }
      return factored({dg, dh}, res.candidates, "split of the univariate image");
    }
  }
  res.verdict = Irreducibility::Irreducible;
  res.detail = std::to_string(parts.size()) + " univariate factors, no subset maps back";
  return res;
}

}  // namespace nilzeta
