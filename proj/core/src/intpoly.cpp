#include "nilzeta/intpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(std::size_t k, const mpz_class& c) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
  std::vector<mpz_class> r = c_;
  for (auto& c : r) c *= k;
  return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  if (is_zero()) return 0;
  mpz_class g = 0;
  for (const auto& c : c_) g = ::gcd(g, c);
  return lead() < 0 ? mpz_class(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  const mpz_class g = content();
  std::vector<mpz_class> r = c_;
  for (auto& c : r) c /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_argument(const mpz_class& k) const {
  std::vector<mpz_class> r = c_;
  mpz_class pw = 1;
  for (auto& c : r) {
    c *= pw;
    pw *= k;
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) out << a.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

bool divides(const IntPoly& d, const IntPoly& a, IntPoly* quotient) {
  if (d.is_zero()) throw Error(ErrorKind::BadInput, "division by the zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (a.degree() < d.degree()) return false;
  std::vector<mpz_class> rem = a.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  std::vector<mpz_class> q(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), dc[dd].get_mpz_t())) return false;
    const mpz_class t = rem[i] / dc[dd];
    q[i - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= t * dc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

namespace {

// a mod b up to a power of lc(b): lc(b)^(deg a - deg b + 1) a = q b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  while (r.size() > db && !r.empty()) {
    const mpz_class lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_part() * abs(b.content());
  if (b.is_zero()) return a.primitive_part() * abs(a.content());
  const mpz_class c = ::gcd(a.content(), b.content());
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = y;
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part() * abs(c);
}

IntPoly cyclotomic(unsigned d) {
  if (d == 0) throw Error(ErrorKind::BadInput, "cyclotomic index must be positive");
  IntPoly p = IntPoly::monomial(d) - IntPoly::constant(1);
  for (unsigned e = 1; e < d; ++e) {
    if (d % e) continue;
    IntPoly q;
    if (!divides(cyclotomic(e), p, &q)) throw Error(ErrorKind::BadInput, "cyclotomic division failed");
    p = q;
  }
  return p;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

namespace {

IntPoly normalized(IntPoly p) {
  p = p.primitive_part();
  return p;
}

void sort_factors(std::vector<IntPoly>& fs) { std::sort(fs.begin(), fs.end(), poly_less); }

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// ---------------------------------------------------------------- Kronecker

// Integer polynomial through the points (xs[i], ys[i]) when the Newton
// interpolant has integer coefficients; the zero polynomial otherwise.
IntPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // expand Newton form
  std::vector<mpq_class> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<mpz_class> out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) return {};
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

bool kronecker_find(const IntPoly& g, int d, IntPoly* factor) {
  // points with few divisors keep the search small
  std::vector<std::pair<std::size_t, mpz_class>> cands;
  for (long x = 0; cands.size() < static_cast<std::size_t>(3 * (d + 1) + 4); x = x > 0 ? -x : -x + 1) {
    const mpz_class v = g.eval(x);
    if (v == 0) continue;
    cands.emplace_back(divisors(v).size(), mpz_class(x));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<mpz_class> xs;
  std::vector<std::vector<mpz_class>> options;
  for (int i = 0; i <= d; ++i) {
    xs.push_back(cands[i].second);
    std::vector<mpz_class> ds = divisors(g.eval(cands[i].second));
    std::vector<mpz_class> signed_ds;
    for (const auto& v : ds) {
      signed_ds.push_back(v);
      if (i > 0) signed_ds.push_back(-v);
    }
    options.push_back(std::move(signed_ds));
  }
  std::vector<std::size_t> pick(d + 1, 0);
  std::vector<mpz_class> ys(d + 1);
  while (true) {
    for (int i = 0; i <= d; ++i) ys[i] = options[i][pick[i]];
    IntPoly h = interpolate(xs, ys);
    if (h.degree() == d) {
      h = normalized(h);
      if (divides(h, g)) {
        *factor = h;
        return true;
      }
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) return false;
  }
}

void kronecker_split(const IntPoly& g, std::vector<IntPoly>& out) {
  for (int d = 2; 2 * d <= g.degree(); ++d) {
    IntPoly h;
    if (kronecker_find(g, d, &h)) {
      IntPoly q;
      divides(h, g, &q);
      kronecker_split(h, out);
      kronecker_split(normalized(q), out);
      return;
    }
  }
  out.push_back(g);
}

}  // namespace

std::vector<IntPoly> factor_kronecker(const IntPoly& f_in) {
  if (f_in.degree() < 1) throw Error(ErrorKind::BadInput, "factoring needs a nonconstant polynomial");
  IntPoly f = normalized(f_in);
  std::vector<IntPoly> out;
  const IntPoly x = IntPoly::monomial(1);
  while (f.coeff(0) == 0) {
    out.push_back(x);
    divides(x, f, &f);
  }
  // rational roots u/v: v x - u with u | f(0), v | lc
  bool found = true;
  while (found && f.degree() >= 1) {
    found = false;
    if (f.degree() == 1) break;
    for (const auto& u : divisors(f.coeff(0))) {
      for (const auto& v : divisors(f.lead())) {
        for (int sign : {1, -1}) {
          IntPoly lin(std::vector<mpz_class>{-mpz_class(u * sign), v});
          lin = normalized(lin);
          IntPoly q;
          if (divides(lin, f, &q)) {
            out.push_back(lin);
            f = normalized(q);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (f.degree() >= 1) {
    if (f.degree() > 12) {
      for (auto& p : factor_zassenhaus(f)) out.push_back(p);
    } else {
      kronecker_split(f, out);
    }
  }
  sort_factors(out);
  return out;
}

// -------------------------------------------------------------- Zassenhaus

namespace {

using ModPoly = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  ModPoly reduce(const IntPoly& f) const {
    ModPoly r(f.coeffs().size());
    mpz_class t;
    for (std::size_t i = 0; i < r.size(); ++i) {
      t = f.coeffs()[i] % static_cast<unsigned long>(p);
      if (t < 0) t += static_cast<unsigned long>(p);
      r[i] = t.get_ui();
    }
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  // a = q b + r
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r) const {
    ModPoly rem = a;
    const std::size_t db = b.size() - 1;
    const std::uint64_t il = inv(b.back());
    ModPoly quo(rem.size() >= b.size() ? rem.size() - db : 0, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
      if (!rem[i]) continue;
      const std::uint64_t t = mul(rem[i], il);
      quo[i - db] = t;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(t, b[j]));
    }
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
  }

  ModPoly mod(const ModPoly& a, const ModPoly& b) const {
    ModPoly r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const std::uint64_t il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  // s a + t b = 1 for coprime a, b
  void bezout(const ModPoly& a, const ModPoly& b, ModPoly* s, ModPoly* t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      ModPoly q, r;
      divmod(r0, r1, &q, &r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t il = inv(r0.at(0));
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    *s = std::move(s0);
    *t = std::move(t0);
  }

  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }

  ModPoly powmod(ModPoly base, const mpz_class& e, const ModPoly& m) const {
    ModPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  const ModPoly x{0, 1};
  ModPoly h = F.mod(x, f);
  for (unsigned d = 1; f.size() >= 2 * d + 1; ++d) {
    h = F.powmod(h, F.p, f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      ModPoly q;
      F.divmod(f, g, &q, nullptr);
      f = F.monic(q);
      h = F.mod(h, f);
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const Field& F, const ModPoly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  if (f.size() - 1 == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, F.p - 1);
  while (true) {
    ModPoly a(f.size() - 1);
    for (auto& c : a) c = coef(rng);
    Field::trim(a);
    if (a.size() < 2) continue;
    ModPoly b = F.powmod(a, e, f);
    b = F.sub(b, ModPoly{1});
    ModPoly g = F.gcd(f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      ModPoly q;
      F.divmod(f, g, &q, nullptr);
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

// ---- arithmetic modulo m = p^k on integer coefficient vectors

using BigPoly = std::vector<mpz_class>;

void big_trim(BigPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigPoly big_mod(BigPoly a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  big_trim(a);
  return a;
}

BigPoly big_add(const BigPoly& a, const BigPoly& b, const mpz_class& m) {
  BigPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return big_mod(std::move(r), m);
}

BigPoly big_sub(const BigPoly& a, const BigPoly& b, const mpz_class& m) {
  BigPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return big_mod(std::move(r), m);
}

BigPoly big_mul(const BigPoly& a, const BigPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  BigPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return big_mod(std::move(r), m);
}

// division by a monic polynomial modulo m
void big_divmod(const BigPoly& a, const BigPoly& b, const mpz_class& m, BigPoly* q, BigPoly* r) {
  BigPoly rem = a;
  const std::size_t db = b.size() - 1;
  BigPoly quo(rem.size() >= b.size() ? rem.size() - db : 0, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    rem[i] %= m;
    if (rem[i] == 0) continue;
    const mpz_class t = rem[i];
    quo[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= t * b[j];
  }
  if (q) *q = big_mod(std::move(quo), m);
  if (r) *r = big_mod(std::move(rem), m);
}

BigPoly lift_small(const ModPoly& a) { return BigPoly(a.begin(), a.end()); }

BigPoly make_monic(BigPoly a, const mpz_class& m) {
  mpz_class il;
  mpz_invert(il.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t());
  for (auto& c : a) c *= il;
  return big_mod(std::move(a), m);
}

// Lifts f ≡ g h (mod m), s g + t h ≡ 1, h monic, to modulus m2 with m | m2 | m^2.
void hensel_step(const BigPoly& f, BigPoly& g, BigPoly& h, BigPoly& s, BigPoly& t, const mpz_class& m2) {
  const BigPoly e = big_sub(big_mod(f, m2), big_mul(g, h, m2), m2);
  BigPoly q, r;
  big_divmod(big_mul(s, e, m2), h, m2, &q, &r);
  const BigPoly g1 = big_add(g, big_add(big_mul(t, e, m2), big_mul(q, g, m2), m2), m2);
  const BigPoly h1 = big_add(h, r, m2);
  BigPoly b = big_sub(big_add(big_mul(s, g1, m2), big_mul(t, h1, m2), m2), BigPoly{1}, m2);
  BigPoly c, d;
  big_divmod(big_mul(s, b, m2), h1, m2, &c, &d);
  s = big_sub(s, d, m2);
  t = big_sub(t, big_add(big_mul(t, b, m2), big_mul(c, g1, m2), m2), m2);
  g = g1;
  h = h1;
}

// F ≡ lc(F) · Π factors (mod p); returns the factors lifted to monic
// polynomials modulo M = p^k.
std::vector<BigPoly> hensel_tree(const Field& Fp, const BigPoly& F, const std::vector<ModPoly>& factors,
                                 const mpz_class& M) {
  if (factors.size() == 1) return {make_monic(big_mod(F, M), M)};
  const std::size_t half = factors.size() / 2;
  const std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  const std::vector<ModPoly> right(factors.begin() + half, factors.end());
  const mpz_class p = static_cast<unsigned long>(Fp.p);
  mpz_class lc = F.back() % p;
  if (lc < 0) lc += p;
  ModPoly a{lc.get_ui()};
  for (const auto& u : left) a = Fp.mul(a, u);
  ModPoly b{1};
  for (const auto& u : right) b = Fp.mul(b, u);
  ModPoly s0, t0;
  Fp.bezout(a, b, &s0, &t0);
  BigPoly g = lift_small(a), h = lift_small(b), s = lift_small(s0), t = lift_small(t0);
  mpz_class m = p;
  while (m < M) {
    mpz_class m2 = m * m;
    if (m2 > M) m2 = M;
    hensel_step(F, g, h, s, t, m2);
    m = m2;
  }
  std::vector<BigPoly> out = hensel_tree(Fp, g, left, M);
  std::vector<BigPoly> rest = hensel_tree(Fp, h, right, M);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

IntPoly symmetric_lift(const BigPoly& a, const mpz_class& M) {
  const mpz_class half = M / 2;
  std::vector<mpz_class> r = a;
  for (auto& c : r) {
    c %= M;
    if (c < 0) c += M;
    if (c > half) c -= M;
  }
  return IntPoly(std::move(r));
}

bool is_small_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Squarefree, primitive, positive leading coefficient, degree >= 2.
void zassenhaus_squarefree(const IntPoly& f, std::vector<IntPoly>& out) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // pick the prime giving the fewest modular factors among a handful
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uint64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (unsigned long p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    const Field F{p};
    if ((f.lead() % p) == 0) continue;
    const ModPoly fp = F.reduce(f);
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    ++tried;
    std::vector<ModPoly> fac;
    for (auto& [g, d] : distinct_degree(F, F.monic(fp))) equal_degree(F, g, d, rng, fac);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::BadInput, "no suitable prime for modular factoring");
  if (best.size() == 1) {
    out.push_back(f);
    return;
  }
  std::sort(best.begin(), best.end());

  // Mignotte: coefficients of lc(f) * (factor / lc(factor)) are bounded by B
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class root = sqrt(norm2) + 1;
  mpz_class bound = abs(f.lead()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  const mpz_class p = static_cast<unsigned long>(best_p);
  mpz_class M = p;
  while (M <= 2 * bound) M *= p;

  const Field F{best_p};
  std::vector<BigPoly> lifted = hensel_tree(F, BigPoly(f.coeffs().begin(), f.coeffs().end()), best, M);

  IntPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  std::iota(live.begin(), live.end(), 0);
  std::size_t d = 1;
  while (2 * d <= live.size()) {
    bool found = false;
    std::vector<std::size_t> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      BigPoly prod{mpz_class(rest.lead())};
      prod = big_mod(prod, M);
      for (std::size_t i : pick) prod = big_mul(prod, lifted[live[i]], M);
      IntPoly cand = symmetric_lift(prod, M);
      if (cand.degree() >= 1) {
        cand = cand.primitive_part();
        IntPoly q;
        if (divides(cand, rest, &q)) {
          out.push_back(cand);
          rest = q.primitive_part();
          std::vector<std::size_t> keep;
          for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
            if (j < d && pick[j] == i) {
              ++j;
              continue;
            }
            keep.push_back(live[i]);
          }
          live = std::move(keep);
          found = true;
          break;
        }
      }
      // next d-subset in lexicographic order
      std::size_t k = d;
      while (k > 0 && pick[k - 1] == live.size() - d + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++d;
  }
  if (rest.degree() >= 1) out.push_back(rest);
}

void zassenhaus(const IntPoly& f, std::vector<IntPoly>& out) {
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return;
  }
  const IntPoly g = gcd(f, f.derivative());
  if (g.degree() >= 1) {
    IntPoly q;
    divides(g, f, &q);
    zassenhaus(g.primitive_part(), out);
    zassenhaus(q.primitive_part(), out);
    return;
  }
  zassenhaus_squarefree(f, out);
}

}  // namespace

std::vector<IntPoly> factor_zassenhaus(const IntPoly& f_in) {
  if (f_in.degree() < 1) throw Error(ErrorKind::BadInput, "factoring needs a nonconstant polynomial");
  std::vector<IntPoly> out;
  zassenhaus(f_in.primitive_part(), out);
  sort_factors(out);
  return out;
}

}  // namespace nilzeta
