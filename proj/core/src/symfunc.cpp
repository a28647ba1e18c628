#include "nilzeta/symfunc.hpp"

#include "nilzeta/error.hpp"

namespace nilzeta {

unsigned Partition::size() const {
  unsigned n = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) n += static_cast<unsigned>(i + 1) * multiplicities[i];
  return n;
}

std::vector<unsigned> Partition::parts() const {
  std::vector<unsigned> out;
  for (std::size_t i = multiplicities.size(); i-- > 0;)
    out.insert(out.end(), multiplicities[i], static_cast<unsigned>(i + 1));
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1) + "^" + std::to_string(multiplicities[i]);
  }
  return out.empty() ? "()" : out;
}

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> mult(n, 0);
  // parts chosen in decreasing order, each at most `max`
  auto rec = [&](auto&& self, unsigned rest, unsigned max) -> void {
    if (rest == 0) {
      out.push_back({mult});
      return;
    }
    for (unsigned k = std::min(rest, max); k >= 1; --k) {
      ++mult[k - 1];
      self(self, rest - k, k);
      --mult[k - 1];
    }
  };
  rec(rec, n, n);
  return out;
}

mpz_class partition_count(unsigned n) {
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const int sign = k % 2 == 1 ? 1 : -1;
      p[m] += sign * p[m - static_cast<unsigned>(g1)];
      if (g2 <= static_cast<long>(m)) p[m] += sign * p[m - static_cast<unsigned>(g2)];
    }
  }
  return p[n];
}

mpz_class j_count(std::uint64_t r, unsigned s) {
  if (r == 0 || s == 0) throw Error(ErrorKind::BadInput, "j_count needs r >= 1 and s >= 1");
  // r_i chosen for positions i = s, s-1, ..., 2; r_1 takes what is left
  auto rec = [&](auto&& self, std::uint64_t rest, unsigned i) -> mpz_class {
    if (i == 1) return 1;
    mpz_class total = 0;
    for (std::uint64_t d = 1; d <= rest; ++d) {
      if (rest % d) continue;
      mpz_class w;
      mpz_ui_pow_ui(w.get_mpz_t(), d, i - 1);
      total += w * self(self, rest / d, i - 1);
    }
    return total;
  };
  return rec(rec, r, s);
}

mpz_class hom_count_symmetric(unsigned n, unsigned s) {
  if (s == 0) throw Error(ErrorKind::BadInput, "s must be at least 1");
  std::vector<mpz_class> j(n + 1);
  for (unsigned i = 1; i <= n; ++i) j[i] = j_count(i, s);
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  mpz_class total = 0;
  for (const Partition& lam : partitions(n)) {
    mpz_class num = nfact, den = 1;
    for (unsigned i = 1; i <= n; ++i) {
      const unsigned a = lam.multiplicities[i - 1];
      if (a == 0) continue;
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), i, a);
      den *= t;
      mpz_fac_ui(t.get_mpz_t(), a);
      den *= t;
      mpz_pow_ui(t.get_mpz_t(), j[i].get_mpz_t(), a);
      num *= t;
    }
    total += num / den;
  }
  return total;
}

}  // namespace nilzeta
