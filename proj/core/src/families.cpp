#include "nilzeta/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "nilzeta/error.hpp"
#include "nilzeta/group_ops.hpp"

namespace nilzeta {
namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& name) {
  if (order > cap)
    throw Error(ErrorKind::OrderCapExceeded,
                name + " has order " + std::to_string(order) + " above cap " + std::to_string(cap));
}

FiniteGroup from_function(std::string name, std::size_t order, auto&& mul, std::vector<std::string> labels) {
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<std::uint16_t>(mul(a, b));
  return FiniteGroup(std::move(name), order, std::move(table), std::move(labels));
}

// Multiplication through an element list and a reverse index, used once a
// group is too large for a table.
template <typename T, typename Hash, typename Compose>
class IndexedBackend final : public Multiplier {
 public:
  IndexedBackend(std::vector<T> elems, std::unordered_map<T, Elem, Hash> index, Compose compose)
      : elems_(std::move(elems)), index_(std::move(index)), compose_(compose) {
    inverse_.resize(elems_.size());
    for (Elem a = 0; a < elems_.size(); ++a) {
      T x = elems_[a];
      T prev = elems_[0];
      while (!(x == elems_[0])) {
        prev = x;
        x = compose_(x, elems_[a]);
      }
      inverse_[a] = index_.at(prev);
    }
  }
  Elem mul(Elem a, Elem b) const override { return index_.at(compose_(elems_[a], elems_[b])); }
  Elem inv(Elem a) const override { return inverse_[a]; }

 private:
  std::vector<T> elems_;
  std::unordered_map<T, Elem, Hash> index_;
  Compose compose_;
  std::vector<Elem> inverse_;
};

// Breadth-first enumeration of <gens>, identity first.
template <typename T, typename Hash, typename Compose, typename Label>
FiniteGroup build_group(std::string name, const T& identity, const std::vector<T>& gens, Compose compose,
                        Label label, std::size_t cap) {
  std::vector<T> elems{identity};
  std::unordered_map<T, Elem, Hash> index;
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const T& s : gens) {
      T y = compose(elems[i], s);
      if (index.find(y) == index.end()) {
        index.emplace(y, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(y));
        if (elems.size() > cap) check_cap(elems.size(), cap, name);
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elems) labels.push_back(label(e));
  if (n <= FiniteGroup::kTableLimit) {
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
    return FiniteGroup(std::move(name), n, std::move(table), std::move(labels));
  }
  auto backend = std::make_shared<IndexedBackend<T, Hash, Compose>>(std::move(elems), std::move(index), compose);
  return FiniteGroup(std::move(name), n, std::move(backend), std::move(labels));
}

// Permutations of at most 16 points packed four bits per point.
using PackedPerm = std::uint64_t;

struct PackedPermHash {
  std::size_t operator()(PackedPerm p) const noexcept {
    p ^= p >> 33;
    p *= 0xff51afd7ed558ccdULL;
    p ^= p >> 33;
    return static_cast<std::size_t>(p);
  }
};

unsigned image(PackedPerm p, unsigned x) { return static_cast<unsigned>((p >> (4 * x)) & 0xF); }

PackedPerm pack(const std::vector<unsigned>& images) {
  PackedPerm p = 0;
  for (unsigned x = 0; x < images.size(); ++x) p |= PackedPerm{images[x]} << (4 * x);
  return p;
}

// One-based cycle list, e.g. {{1,2,3},{4,5}}.
PackedPerm from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(degree);
  for (unsigned x = 0; x < degree; ++x) img[x] = x;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return pack(img);
}

std::string cycle_label(PackedPerm p, unsigned degree) {
  std::string out;
  std::vector<char> seen(degree, 0);
  for (unsigned x = 0; x < degree; ++x) {
    if (seen[x] || image(p, x) == x) continue;
    out += '(';
    unsigned y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ',';
      out += std::to_string(y + 1);
      first = false;
      y = image(p, y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(std::string name, unsigned degree, const std::vector<PackedPerm>& gens,
                              std::size_t cap) {
  if (degree > 16) throw Error(ErrorKind::BadInput, "permutation degree above 16");
  std::vector<unsigned> id(degree);
  for (unsigned x = 0; x < degree; ++x) id[x] = x;
  auto compose = [degree](PackedPerm a, PackedPerm b) {
    // (ab)(x) = a(b(x))
    PackedPerm out = 0;
    for (unsigned x = 0; x < degree; ++x) out |= PackedPerm{image(a, image(b, x))} << (4 * x);
    return out;
  };
  auto label = [degree](PackedPerm p) { return cycle_label(p, degree); };
  return build_group<PackedPerm, PackedPermHash>(std::move(name), pack(id), gens, compose, label, cap);
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// GF(q) with q = p^k, elements encoded as sum c_i p^i.
class FiniteField {
 public:
  explicit FiniteField(unsigned q) : q_(q) {
    const auto ps = prime_divisors(q);
    if (ps.size() != 1) throw Error(ErrorKind::BadInput, "field order must be a prime power");
    p_ = static_cast<unsigned>(ps[0]);
    unsigned k = 0;
    for (unsigned t = q; t > 1; t /= p_) ++k;
    // monic modulus coefficients c_0..c_{k-1} of w^k = -(c_0 + ... )
    std::vector<unsigned> modulus;
    if (k == 1) modulus = {};
    else if (q == 4) modulus = {1, 1};
    else if (q == 8) modulus = {1, 1, 0};
    else if (q == 9) modulus = {2, 2};
    else if (q == 16) modulus = {1, 1, 0, 0};
    else throw Error(ErrorKind::UnknownFamily, "no field polynomial declared for q = " + std::to_string(q));
    k_ = k;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    auto digits = [&](unsigned a) {
      std::vector<unsigned> d(k_);
      for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
      }
      return d;
    };
    auto encode = [&](const std::vector<unsigned>& d) {
      unsigned a = 0;
      for (unsigned i = k_; i-- > 0;) a = a * p_ + d[i];
      return a;
    };
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<unsigned> s(k_);
        for (unsigned i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = encode(s);
        std::vector<unsigned> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
          for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (unsigned deg = 2 * k_ - 1; deg >= k_ && deg < 2 * k_; --deg) {
          const unsigned c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          // w^k = -(modulus)
          for (unsigned i = 0; i < k_; ++i)
            prod[deg - k_ + i] = (prod[deg - k_ + i] + (p_ - modulus[i]) % p_ * c) % p_;
        }
        prod.resize(k_);
        mul_[a * q + b] = encode(prod);
      }
    neg_.resize(q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        if (add_[a * q + b] == 0) neg_[a] = b;
  }

  unsigned order() const { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }

 private:
  unsigned q_, p_ = 0, k_ = 1;
  std::vector<unsigned> add_, mul_, neg_;
};

using Mat2 = std::array<std::uint16_t, 4>;

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const noexcept {
    std::uint64_t h = 0;
    for (auto v : m) h = h * 0x100000001b3ULL + v + 1;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

FiniteGroup matrix_group(unsigned q, bool projective, std::size_t cap) {
  std::string name = (projective ? "PSL(2," : "SL(2,") + std::to_string(q) + ")";
  const std::uint64_t sl_order = std::uint64_t{q} * (std::uint64_t{q} * q - 1);
  const std::uint64_t order = (projective && q % 2 == 1) ? sl_order / 2 : sl_order;
  check_cap(order, cap, name);
  auto field = std::make_shared<const FiniteField>(q);
  auto canon = [field, projective](Mat2 m) {
    if (!projective) return m;
    Mat2 n;
    for (int i = 0; i < 4; ++i) n[i] = static_cast<std::uint16_t>(field->neg(m[i]));
    return std::min(m, n);
  };
  auto compose = [field, canon](const Mat2& a, const Mat2& b) {
    const FiniteField& f = *field;
    Mat2 c{static_cast<std::uint16_t>(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2]))),
           static_cast<std::uint16_t>(f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3]))),
           static_cast<std::uint16_t>(f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2]))),
           static_cast<std::uint16_t>(f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])))};
    return canon(c);
  };
  std::vector<Mat2> gens;
  for (unsigned t = 1; t < q; ++t) {
    gens.push_back(canon(Mat2{1, static_cast<std::uint16_t>(t), 0, 1}));
    gens.push_back(canon(Mat2{1, 0, static_cast<std::uint16_t>(t), 1}));
  }
  auto label = [](const Mat2& m) {
    return "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]";
  };
  return build_group<Mat2, Mat2Hash>(std::move(name), canon(Mat2{1, 0, 0, 1}), gens, compose, label, cap);
}

class ProductBackend final : public Multiplier {
 public:
  ProductBackend(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {}
  Elem mul(Elem a, Elem b) const override {
    const auto n = static_cast<Elem>(h_.order());
    return g_.mul(a / n, b / n) * n + h_.mul(a % n, b % n);
  }
  Elem inv(Elem a) const override {
    const auto n = static_cast<Elem>(h_.order());
    return g_.inv(a / n) * n + h_.inv(a % n);
  }

 private:
  FiniteGroup g_, h_;
};

class QuotientBackend final : public Multiplier {
 public:
  QuotientBackend(FiniteGroup g, CosetPartition cosets) : g_(std::move(g)), cosets_(std::move(cosets)) {}
  Elem mul(Elem a, Elem b) const override { return cosets_.coset_of[g_.mul(cosets_.reps[a], cosets_.reps[b])]; }
  Elem inv(Elem a) const override { return cosets_.coset_of[g_.inv(cosets_.reps[a])]; }

 private:
  FiniteGroup g_;
  CosetPartition cosets_;
};

class SubgroupBackend final : public Multiplier {
 public:
  SubgroupBackend(FiniteGroup g, std::vector<Elem> elems) : g_(std::move(g)), elems_(std::move(elems)) {
    for (Elem i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  }
  Elem mul(Elem a, Elem b) const override { return index_.at(g_.mul(elems_[a], elems_[b])); }
  Elem inv(Elem a) const override { return index_.at(g_.inv(elems_[a])); }

 private:
  FiniteGroup g_;
  std::vector<Elem> elems_;
  std::unordered_map<Elem, Elem> index_;
};

// ---- spec grammar -------------------------------------------------------

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  FiniteGroup parse() {
    FiniteGroup g = product();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  FiniteGroup product() {
    FiniteGroup g = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        ++pos_;
        FiniteGroup h = term();
        check_cap(g.order() * h.order(), cap_, g.name() + "x" + h.name());
        g = direct_product(g, h, cap_);
      } else {
        return g;
      }
    }
  }

  FiniteGroup term() {
    skip_ws();
    if (accept("central(")) {
      FiniteGroup a = product();
      expect(',');
      FiniteGroup b = product();
      expect(')');
      return central_product_of_centers(a, b, cap_);
    }
    if (accept("PSL(2,")) {
      const auto q = number();
      expect(')');
      return projective_special_linear2(static_cast<unsigned>(q), cap_);
    }
    if (accept("SL(2,")) {
      const auto q = number();
      expect(')');
      return special_linear2(static_cast<unsigned>(q), cap_);
    }
    if (accept("M11")) return mathieu11(cap_);
    if (accept("ES32")) return extraspecial32();
    if (accept("Q8")) return quaternion8();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == 'C' || c == 'D' || c == 'S' || c == 'A') {
        ++pos_;
        const auto n = number();
        switch (c) {
          case 'C':
            check_cap(n, cap_, "C" + std::to_string(n));
            return cyclic(n);
          case 'D':
            check_cap(n, cap_, "D" + std::to_string(n));
            return dihedral(n);
          case 'S': return symmetric(static_cast<unsigned>(n), cap_);
          default: return alternating(static_cast<unsigned>(n), cap_);
        }
      }
    }
    throw Error(ErrorKind::UnknownFamily, "cannot parse group spec '" + std::string(text_) + "' at offset " +
                                              std::to_string(pos_));
  }

  std::size_t number() {
    skip_ws();
    std::size_t value = 0;
    const auto* begin = text_.data() + pos_;
    const auto* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::BadInput,
                "group spec '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0 || n > 65536) throw Error(ErrorKind::BadInput, "cyclic order must be in 1..65536");
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (std::size_t k = 1; k < n; ++k) labels[k] = k == 1 ? "a" : "a^" + std::to_string(k);
  return from_function("C" + std::to_string(n), n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
                       std::move(labels));
}

FiniteGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0 || order > 4096) throw Error(ErrorKind::BadInput, "dihedral order must be even, 2..4096");
  const std::size_t n = order / 2;
  // index = k + n*e for r^k s^e
  auto mul = [n](std::size_t a, std::size_t b) {
    const std::size_t ka = a % n, ea = a / n, kb = b % n, eb = b / n;
    const std::size_t k = ea ? (ka + n - kb) % n : (ka + kb) % n;
    return k + n * ((ea + eb) % 2);
  };
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    const std::size_t k = i % n, e = i / n;
    std::string r = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
    if (e) r += r.empty() ? "s" : " s";
    labels[i] = r.empty() ? "e" : r;
  }
  return from_function("D" + std::to_string(order), order, mul, std::move(labels));
}

FiniteGroup quaternion8() {
  // index = 2*unit + sign, units 1,i,j,k
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [](std::size_t a, std::size_t b) {
    const std::size_t ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
    const std::size_t u = static_cast<std::size_t>(unit_mul[ua][ub]);
    const std::size_t s = (sa + sb + static_cast<std::size_t>(sign_mul[ua][ub])) % 2;
    return 2 * u + s;
  };
  return from_function("Q8", 8, mul, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup symmetric(unsigned degree, std::size_t order_cap) {
  const std::string name = "S" + std::to_string(degree);
  if (degree == 0 || degree > 16) throw Error(ErrorKind::BadInput, "symmetric degree must be 1..16");
  if (degree > 20 || factorial(degree) > order_cap) check_cap(factorial(degree), order_cap, name);
  std::vector<PackedPerm> gens;
  if (degree >= 2) {
    gens.push_back(from_cycles(degree, {{1, 2}}));
    std::vector<unsigned> cyc(degree);
    for (unsigned i = 0; i < degree; ++i) cyc[i] = i + 1;
    gens.push_back(from_cycles(degree, {cyc}));
  }
  return permutation_group(name, degree, gens, order_cap);
}

FiniteGroup alternating(unsigned degree, std::size_t order_cap) {
  const std::string name = "A" + std::to_string(degree);
  if (degree == 0 || degree > 16) throw Error(ErrorKind::BadInput, "alternating degree must be 1..16");
  if (degree >= 2) check_cap(factorial(degree) / 2, order_cap, name);
  std::vector<PackedPerm> gens;
  for (unsigned k = 3; k <= degree; ++k) gens.push_back(from_cycles(degree, {{1, 2, k}}));
  return permutation_group(name, degree, gens, order_cap);
}

FiniteGroup special_linear2(unsigned q, std::size_t order_cap) { return matrix_group(q, false, order_cap); }

FiniteGroup projective_special_linear2(unsigned q, std::size_t order_cap) {
  return matrix_group(q, true, order_cap);
}

FiniteGroup mathieu11(std::size_t order_cap) {
  check_cap(7920, order_cap, "M11");
  const std::vector<PackedPerm> gens{from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                                     from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})};
  return permutation_group("M11", 11, gens, order_cap);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  const std::size_t n = g.order() * h.order();
  std::string name = g.name() + "x" + h.name();
  check_cap(n, order_cap, name);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b) labels[a * h.order() + b] = "(" + g.label(a) + "," + h.label(b) + ")";
  if (n <= FiniteGroup::kTableLimit) {
    const auto hn = h.order();
    return from_function(std::move(name), n,
                         [&](std::size_t a, std::size_t b) {
                           return g.mul(static_cast<Elem>(a / hn), static_cast<Elem>(b / hn)) * hn +
                                  h.mul(static_cast<Elem>(a % hn), static_cast<Elem>(b % hn));
                         },
                         std::move(labels));
  }
  return FiniteGroup(std::move(name), n, std::make_shared<ProductBackend>(g, h), std::move(labels));
}

FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            std::span<const std::pair<Elem, Elem>> identification, std::size_t order_cap) {
  const ElementMask zg = center(g), zh = center(h);
  ElementMask dom(g.order()), img(h.order());
  std::unordered_map<Elem, Elem> phi;
  for (auto [z, w] : identification) {
    if (z >= g.order() || w >= h.order() || !zg.test(z) || !zh.test(w))
      throw Error(ErrorKind::BadIdentification, "identified elements must be central");
    if (!phi.emplace(z, w).second || !img.set(w))
      throw Error(ErrorKind::BadIdentification, "identification is not a bijection");
    dom.set(z);
  }
  if (!dom.test(0) || phi.at(0) != 0 || !is_subgroup(g, dom) || !is_subgroup(h, img))
    throw Error(ErrorKind::BadIdentification, "identification must be between subgroups");
  for (auto [a, fa] : phi)
    for (auto [b, fb] : phi)
      if (phi.at(g.mul(a, b)) != h.mul(fa, fb))
        throw Error(ErrorKind::BadIdentification, "identification is not a homomorphism");

  const FiniteGroup prod = direct_product(g, h, std::max(order_cap, g.order() * h.order()));
  ElementMask n(prod.order());
  for (auto [z, w] : phi) n.set(static_cast<Elem>(z * h.order() + h.inv(w)));
  Quotient qt = quotient(prod, n);
  check_cap(qt.group.order(), order_cap, "central product");
  qt.group.rename("central(" + g.name() + "," + h.name() + ")");
  return std::move(qt.group);
}

FiniteGroup central_product_of_centers(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  const ElementMask zg = center(g), zh = center(h);
  auto generator = [](const FiniteGroup& grp, const ElementMask& z) -> Elem {
    Elem best = 0;
    std::size_t best_order = 1;
    z.for_each([&](Elem e) {
      const std::size_t o = grp.element_order(e);
      if (o > best_order) {
        best = e;
        best_order = o;
      }
    });
    return best_order == z.count() ? best : static_cast<Elem>(grp.order());
  };
  const Elem a = generator(g, zg), b = generator(h, zh);
  if (zg.count() != zh.count() || a == g.order() || b == h.order())
    throw Error(ErrorKind::BadIdentification, "centers must be cyclic of equal order");
  std::vector<std::pair<Elem, Elem>> phi;
  Elem x = 0, y = 0;
  for (std::size_t k = 0; k < zg.count(); ++k) {
    phi.emplace_back(x, y);
    x = g.mul(x, a);
    y = h.mul(y, b);
  }
  return central_product(g, h, phi, order_cap);
}

FiniteGroup extraspecial32() {
  FiniteGroup g = central_product_of_centers(quaternion8(), quaternion8());
  g.rename("ES32");
  return g;
}

Quotient quotient(const FiniteGroup& g, const ElementMask& n) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + g.name());
  CosetPartition cosets = left_cosets(g, n);
  const std::size_t m = cosets.reps.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = "[" + g.label(cosets.reps[i]) + "]";
  std::vector<Elem> projection(cosets.coset_of.begin(), cosets.coset_of.end());
  std::string name = g.name() + "/N" + std::to_string(n.count());
  if (m <= FiniteGroup::kTableLimit) {
    FiniteGroup q = from_function(std::move(name), m,
                                  [&](std::size_t a, std::size_t b) {
                                    return cosets.coset_of[g.mul(cosets.reps[a], cosets.reps[b])];
                                  },
                                  std::move(labels));
    return {std::move(q), std::move(projection)};
  }
  FiniteGroup q(std::move(name), m, std::make_shared<QuotientBackend>(g, std::move(cosets)), std::move(labels));
  return {std::move(q), std::move(projection)};
}

Embedded induced_subgroup(const FiniteGroup& g, const ElementMask& h, std::string name) {
  std::vector<Elem> elems = h.elements();
  if (elems.empty() || elems[0] != 0) throw Error(ErrorKind::BadInput, "subgroup must contain the identity");
  if (name.empty()) name = g.name() + "[" + std::to_string(elems.size()) + "]";
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (Elem e : elems) labels.push_back(g.label(e));
  if (elems.size() <= FiniteGroup::kTableLimit) {
    std::unordered_map<Elem, Elem> index;
    for (Elem i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    FiniteGroup sub = from_function(std::move(name), elems.size(),
                                    [&](std::size_t a, std::size_t b) { return index.at(g.mul(elems[a], elems[b])); },
                                    std::move(labels));
    return {std::move(sub), std::move(elems)};
  }
  FiniteGroup sub(std::move(name), elems.size(), std::make_shared<SubgroupBackend>(g, elems), std::move(labels));
  return {std::move(sub), std::move(elems)};
}

FiniteGroup make_group(std::string_view spec, std::size_t order_cap) {
  FiniteGroup g = SpecParser(spec, order_cap).parse();
  g.rename(std::string(spec));
  return g;
}

}  // namespace nilzeta
