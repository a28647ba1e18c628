#include "nilzeta/group.hpp"

#include <random>
#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta {

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order) {
  if (order_ == 0 || order_ > 65536 || table.size() != order_ * order_)
    throw Error(ErrorKind::BadInput, "malformed Cayley table for " + name_);
  if (labels.size() != order_) throw Error(ErrorKind::BadInput, "label count mismatch for " + name_);
  std::vector<Elem> inverse(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table[a * order_ + b] == 0) {
        inverse[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::BadInput, "element without inverse in " + name_);
  }
  inverse_ = std::make_shared<const std::vector<Elem>>(std::move(inverse));
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  if (order_ > 1) {
    table_ = std::make_shared<const std::vector<std::uint16_t>>(std::move(table));
    tab_ = table_->data();
  }
}

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::shared_ptr<const Multiplier> backend,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), backend_(std::move(backend)) {
  if (order_ == 0 || !backend_) throw Error(ErrorKind::BadInput, "missing multiplier for " + name_);
  if (labels.size() != order_) throw Error(ErrorKind::BadInput, "label count mismatch for " + name_);
  std::vector<Elem> inverse(order_);
  for (std::size_t a = 0; a < order_; ++a) inverse[a] = backend_->inv(static_cast<Elem>(a));
  inverse_ = std::make_shared<const std::vector<Elem>>(std::move(inverse));
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Elem FiniteGroup::power(Elem g, std::uint64_t k) const {
  Elem result = identity;
  Elem base = g;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t n = 1;
  for (Elem x = g; x != identity; x = mul(x, g)) ++n;
  return n;
}

std::string check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit,
                               std::size_t random_triples) {
  const std::size_t n = g.order();
  std::ostringstream err;
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      err << "identity law fails at " << a;
      return err.str();
    }
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) {
      err << "inverse law fails at " << a;
      return err.str();
    }
  }
  if (n <= exhaustive_limit || g.table_backed()) {
    // rows and columns must be permutations
    std::vector<char> seen(n);
    for (Elem a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n; ++b) {
        Elem p = g.mul(a, b);
        if (p >= n || seen[p]) {
          err << "row " << a << " is not a permutation";
          return err.str();
        }
        seen[p] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < n; ++b) {
        Elem p = g.mul(b, a);
        if (p >= n || seen[p]) {
          err << "column " << a << " is not a permutation";
          return err.str();
        }
        seen[p] = 1;
      }
    }
  }
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
            err << "associativity fails at (" << a << "," << b << "," << c << ")";
            return err.str();
          }
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t t = 0; t < random_triples; ++t) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
        err << "associativity fails at (" << a << "," << b << "," << c << ")";
        return err.str();
      }
    }
  }
  return {};
}

}  // namespace nilzeta
