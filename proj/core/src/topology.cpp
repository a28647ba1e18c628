#include "nilzeta/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "nilzeta/error.hpp"
#include "nilzeta/group_ops.hpp"
#include "nilzeta/nilprob.hpp"

namespace nilzeta {

namespace {

void require_large_class(const FiniteGroup& g, unsigned q) {
  if (q < 2) throw Error(ErrorKind::BadInput, "class bound q must be at least 2");
  if (q == 2 ? is_abelian(g) : class_below(g, g.full_mask(), q))
    throw Error(ErrorKind::GroupIsNilpotentOfSmallClass,
                g.name() + " has class below " + std::to_string(q) + "; E(q,G) is not defined");
}

mpz_class index_of(const NilpotentPoset& p, std::size_t i) { return mpz_class(static_cast<unsigned long>(p.records()[i].index_in_group)); }

nlohmann::json big(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

}  // namespace

// ------------------------------------------------------------------ Euler

EulerRoutes euler_routes(const FiniteGroup& g, unsigned q) {
  require_large_class(g, q);
  const NilpotentPoset p = build_lattice(g, q);
  EulerRoutes r;
  const ExactRational s = series_pq(g, q).eval_at(-1);
  r.series = s.get_num();

  mpz_class sum = 1;  // μ(G,G) |G:G|
  for (std::size_t i = 0; i < p.size(); ++i) sum += mpz_class(static_cast<long>(p.mobius_to_top()[i])) * index_of(p, i);
  r.lattice = 1 - sum;

  // Möbius function of M_q(G) ∪ {G} on its own
  std::vector<mpz_class> mu(p.size(), 0);
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!p.records()[i].in_mq) continue;
    mpz_class acc = 1;
    p.strictly_above(i).for_each([&](Elem j) {
      if (p.records()[j].in_mq) acc += mu[j];
    });
    mu[i] = -acc;
  }
  r.crosscut = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.records()[i].in_mq) r.crosscut -= mu[i] * index_of(p, i);
  return r;
}

mpz_class euler_characteristic(const FiniteGroup& g, unsigned q) {
  const EulerRoutes r = euler_routes(g, q);
  if (r.series != r.lattice || r.series != r.crosscut)
    throw std::logic_error("Euler characteristic routes disagree: " + r.series.get_str() + ", " +
                           r.lattice.get_str() + ", " + r.crosscut.get_str());
  return r.series;
}

// --------------------------------------------------------- coset complex

std::size_t CosetComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& s : simplices_) n += s.size();
  return n;
}

mpz_class CosetComplex::euler_characteristic() const {
  mpz_class chi = 0;
  for (std::size_t d = 0; d < simplices_.size(); ++d) {
    const mpz_class n = static_cast<unsigned long>(simplices_[d].size());
    chi += d % 2 == 0 ? n : mpz_class(-n);
  }
  return chi;
}

nlohmann::json CosetComplex::to_json() const {
  const FiniteGroup& g = poset_.group();
  nlohmann::json verts = nlohmann::json::array();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    verts.push_back({{"id", i},
                     {"record", v.record},
                     {"subgroup_order", poset_.records()[v.record].order},
                     {"rep", v.rep},
                     {"label", g.label(v.rep) + "H" + std::to_string(v.record)}});
  }
  nlohmann::json simp = nlohmann::json::array();
  nlohmann::json f = nlohmann::json::array();
  for (const auto& layer : simplices_) {
    simp.push_back(layer);
    f.push_back(layer.size());
  }
  return {{"group", g.name()}, {"q", poset_.q()}, {"vertices", verts}, {"f_vector", f}, {"simplices", simp}};
}

CosetComplex build_coset_complex(const FiniteGroup& g, unsigned q, std::size_t budget) {
  require_large_class(g, q);
  CosetComplex c;
  c.poset_ = build_lattice(g, q);
  const NilpotentPoset& p = c.poset_;

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.records()[i].in_mq) members.push_back(i);

  std::vector<CosetPartition> parts;
  std::vector<std::uint32_t> base;
  for (std::size_t m : members) {
    parts.push_back(left_cosets(g, p.records()[m].mask));
    base.push_back(static_cast<std::uint32_t>(c.vertices_.size()));
    for (Elem rep : parts.back().reps) c.vertices_.push_back({m, rep});
    if (c.vertices_.size() > budget)
      throw Error(ErrorKind::BudgetExceeded, "coset complex exceeds " + std::to_string(budget) + " simplices");
  }

  // xH ⊂ yK iff H < K and xK = yK
  std::vector<std::vector<std::uint32_t>> up(c.vertices_.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    std::vector<std::size_t> above;
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (p.strictly_above(members[a]).test(static_cast<Elem>(members[b]))) above.push_back(b);
    for (std::size_t k = 0; k < parts[a].reps.size(); ++k) {
      auto& list = up[base[a] + k];
      for (std::size_t b : above) list.push_back(base[b] + parts[b].coset_of[parts[a].reps[k]]);
    }
  }

  std::size_t total = 0;
  std::vector<std::uint32_t> chain;
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    chain.push_back(v);
    if (c.simplices_.size() < chain.size()) c.simplices_.emplace_back();
    c.simplices_[chain.size() - 1].push_back(chain);
    if (++total > budget)
      throw Error(ErrorKind::BudgetExceeded, "coset complex exceeds " + std::to_string(budget) + " simplices");
    for (std::uint32_t w : up[v]) self(self, w);
    chain.pop_back();
  };
  for (std::uint32_t v = 0; v < c.vertices_.size(); ++v) dfs(dfs, v);
  for (auto& layer : c.simplices_) std::sort(layer.begin(), layer.end());
  return c;
}

SparseIntMatrix boundary_matrix(const CosetComplex& c, int d) {
  if (d < 1 || d > c.dimension()) throw Error(ErrorKind::BadInput, "no boundary map in dimension " + std::to_string(d));
  const auto& lower = c.simplices()[d - 1];
  const auto& upper = c.simplices()[d];
  SparseIntMatrix m;
  m.rows = lower.size();
  m.cols.resize(upper.size());
  std::vector<std::uint32_t> face;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const auto& s = upper[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto it = std::lower_bound(lower.begin(), lower.end(), face);
      m.cols[j].emplace_back(static_cast<std::uint32_t>(it - lower.begin()), i % 2 == 0 ? 1 : -1);
    }
    std::sort(m.cols[j].begin(), m.cols[j].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

// ------------------------------------------------------------------- SNF

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

std::vector<mpz_class> snf_dense(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry as pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) {
          clean = false;
          if (abs(a[i][t]) < abs(a[t][t])) std::swap(a[i], a[t]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) {
          clean = false;
          if (abs(a[t][j]) < abs(a[t][t]))
            for (auto& row : a) std::swap(row[t], row[j]);
        }
      }
      if (!clean) continue;
      // the pivot must divide the rest
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<mpz_class> smith_invariants_dense(const SparseIntMatrix& m) {
  Dense a(m.rows, std::vector<mpz_class>(m.cols.size(), 0));
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [i, v] : m.cols[j]) a[i][j] += v;
  return snf_dense(std::move(a));
}

namespace {

// map-based unit elimination in mpz, then the dense remainder
std::vector<mpz_class> smith_invariants_mpz(const SparseIntMatrix& m) {
  std::vector<std::map<std::uint32_t, mpz_class>> cols(m.cols.size());
  std::vector<std::set<std::uint32_t>> row_cols(m.rows);
  for (std::uint32_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [i, v] : m.cols[j]) {
      if (v == 0) continue;
      auto& e = cols[j][i];
      e += v;
      if (e == 0) {
        cols[j].erase(i);
        row_cols[i].erase(j);
      } else {
        row_cols[i].insert(j);
      }
    }

  std::size_t units = 0;
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t j = 0; j < cols.size(); ++j)
      if (!cols[j].empty()) order.push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return cols[a].size() < cols[b].size(); });
    for (std::uint32_t c : order) {
      if (cols[c].empty()) continue;
      // unit pivot in the sparsest row
      std::uint32_t r = 0;
      bool found = false;
      for (const auto& [i, v] : cols[c])
        if ((v == 1 || v == -1) && (!found || row_cols[i].size() < row_cols[r].size())) r = i, found = true;
      if (!found) continue;
      const mpz_class u = cols[c].at(r);
      const std::vector<std::uint32_t> others(row_cols[r].begin(), row_cols[r].end());
      for (std::uint32_t c2 : others) {
        if (c2 == c) continue;
        const mpz_class f = cols[c2].at(r) * u;
        for (const auto& [i, v] : cols[c]) {
          auto& e = cols[c2][i];
          e -= f * v;
          if (e == 0) {
            cols[c2].erase(i);
            row_cols[i].erase(c2);
          } else {
            row_cols[i].insert(c2);
          }
        }
      }
      for (const auto& entry : cols[c]) row_cols[entry.first].erase(c);
      cols[c].clear();
      ++units;
      progress = true;
    }
  }

  // dense remainder
  std::vector<std::uint32_t> live_cols, live_rows;
  for (std::uint32_t j = 0; j < cols.size(); ++j)
    if (!cols[j].empty()) live_cols.push_back(j);
  for (std::uint32_t i = 0; i < row_cols.size(); ++i)
    if (!row_cols[i].empty()) live_rows.push_back(i);
  std::vector<mpz_class> out(units, mpz_class(1));
  if (!live_cols.empty()) {
    std::map<std::uint32_t, std::size_t> row_pos;
    for (std::size_t k = 0; k < live_rows.size(); ++k) row_pos[live_rows[k]] = k;
    Dense a(live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
    for (std::size_t k = 0; k < live_cols.size(); ++k)
      for (const auto& [i, v] : cols[live_cols[k]]) a[row_pos.at(i)][k] = v;
    for (auto& d : snf_dense(std::move(a))) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Sparse Schur-complement elimination on unit pivots, cheapest column first,
// over int64. Returns the number of unit pivots and leaves the rest in `rows`.
std::size_t eliminate_units(std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& rows,
                            std::vector<std::vector<std::uint32_t>>& cols) {
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  auto value = [&](std::uint32_t i, std::uint32_t j) {
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), Entry{j, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return it != row.end() && it->first == j ? it->second : 0;
  };
  auto drop = [&](std::uint32_t j, std::uint32_t i) {
    auto& c = cols[j];
    auto it = std::find(c.begin(), c.end(), i);
    *it = c.back();
    c.pop_back();
  };

  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  for (std::uint32_t j = 0; j < cols.size(); ++j)
    if (!cols[j].empty()) queue.emplace(cols[j].size(), j);

  std::size_t units = 0;
  std::vector<Entry> merged;
  while (true) {
    while (!queue.empty()) {
      const auto [count, c] = queue.top();
      queue.pop();
      if (count != cols[c].size() || count == 0) continue;
      std::uint32_t r = 0;
      bool found = false;
      for (std::uint32_t i : cols[c]) {
        const std::int64_t v = value(i, c);
        if ((v == 1 || v == -1) && (!found || rows[i].size() < rows[r].size())) r = i, found = true;
      }
      if (!found) continue;
      const std::int64_t u = value(r, c);
      std::vector<Entry> pivot_row;
      for (const auto& e : rows[r])
        if (e.first != c) pivot_row.push_back(e);
      const std::vector<std::uint32_t> targets = cols[c];
      for (std::uint32_t i : targets) {
        if (i == r) continue;
        const std::int64_t f = checked_mul(value(i, c), u);
        auto& row = rows[i];
        merged.clear();
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < pivot_row.size()) {
          if (a < row.size() && row[a].first == c) {
            ++a;
            continue;
          }
          if (b == pivot_row.size() || (a < row.size() && row[a].first < pivot_row[b].first)) {
            merged.push_back(row[a++]);
          } else if (a == row.size() || pivot_row[b].first < row[a].first) {
            const std::uint32_t j = pivot_row[b].first;
            merged.emplace_back(j, checked_sub(0, checked_mul(f, pivot_row[b].second)));
            cols[j].push_back(i);
            queue.emplace(cols[j].size(), j);
            ++b;
          } else {
            const std::uint32_t j = row[a].first;
            const std::int64_t v = checked_sub(row[a].second, checked_mul(f, pivot_row[b].second));
            if (v != 0) {
              merged.emplace_back(j, v);
            } else {
              drop(j, i);
              queue.emplace(cols[j].size(), j);
            }
            ++a;
            ++b;
          }
        }
        row.swap(merged);
      }
      for (const auto& e : rows[r])
        if (e.first != c) {
          drop(e.first, r);
          queue.emplace(cols[e.first].size(), e.first);
        }
      rows[r].clear();
      cols[c].clear();
      ++units;
    }
    // entries can turn into units without changing their column's size
    bool again = false;
    for (std::uint32_t j = 0; j < cols.size(); ++j)
      for (std::uint32_t i : cols[j]) {
        const std::int64_t v = value(i, j);
        if (v == 1 || v == -1) {
          queue.emplace(cols[j].size(), j);
          again = true;
          break;
        }
      }
    if (!again) return units;
  }
}

}  // namespace

std::vector<mpz_class> smith_invariants(const SparseIntMatrix& m) {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> cols(m.cols.size());
  try {
    for (std::uint32_t j = 0; j < m.cols.size(); ++j)
      for (const auto& [i, v] : m.cols[j]) {
        if (!v.fits_slong_p()) throw Overflow{};
        rows[i].emplace_back(j, v.get_si());
      }
    for (std::uint32_t i = 0; i < rows.size(); ++i) {
      auto& row = rows[i];
      std::sort(row.begin(), row.end());
      std::vector<std::pair<std::uint32_t, std::int64_t>> merged;
      for (const auto& e : row) {
        if (!merged.empty() && merged.back().first == e.first) {
          merged.back().second += e.second;
        } else {
          merged.push_back(e);
        }
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      }
      row.swap(merged);
      for (const auto& e : row) cols[e.first].push_back(i);
    }
    const std::size_t units = eliminate_units(rows, cols);
    SparseIntMatrix rest;
    std::vector<std::uint32_t> live_rows;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty()) live_rows.push_back(i);
    rest.rows = live_rows.size();
    std::vector<std::uint32_t> col_pos(cols.size(), UINT32_MAX);
    for (std::uint32_t j = 0; j < cols.size(); ++j)
      if (!cols[j].empty()) {
        col_pos[j] = static_cast<std::uint32_t>(rest.cols.size());
        rest.cols.emplace_back();
      }
    for (std::uint32_t k = 0; k < live_rows.size(); ++k)
      for (const auto& [j, v] : rows[live_rows[k]]) rest.cols[col_pos[j]].emplace_back(k, mpz_class(static_cast<long>(v)));
    std::vector<mpz_class> out(units, mpz_class(1));
    for (auto& d : smith_invariants_mpz(rest)) out.push_back(std::move(d));
    std::sort(out.begin(), out.end());
    return out;
  } catch (const Overflow&) {
    return smith_invariants_mpz(m);
  }
}

// -------------------------------------------------------------- homology

HomologySummary homology(const CosetComplex& c) {
  const int top = c.dimension();
  HomologySummary h;
  if (top < 0) return h;
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<mpz_class>> inv(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    inv[d] = smith_invariants(boundary_matrix(c, d));
    rank[d] = inv[d].size();
  }
  for (int d = 0; d <= top; ++d) {
    HomologyGroup grp;
    grp.betti = c.simplices()[d].size() - rank[d] - rank[d + 1];
    for (const auto& v : inv[d + 1])
      if (v > 1) grp.torsion.push_back(v);
    h.groups.push_back(std::move(grp));
  }
  return h;
}

std::string HomologySummary::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    std::vector<std::string> parts;
    if (groups[d].betti == 1) parts.push_back("Z");
    if (groups[d].betti > 1) parts.push_back("Z^" + std::to_string(groups[d].betti));
    for (const auto& t : groups[d].torsion) parts.push_back("Z/" + t.get_str());
    std::string body = parts.empty() ? "0" : parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) body += " + " + parts[k];
    if (!out.empty()) out += ", ";
    out += "H_" + std::to_string(d) + " = " + body;
  }
  return out;
}

nlohmann::json HomologySummary::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t d = 0; d < groups.size(); ++d) {
    nlohmann::json tor = nlohmann::json::array();
    for (const auto& t : groups[d].torsion) tor.push_back(big(t));
    arr.push_back({{"dim", d}, {"betti", groups[d].betti}, {"torsion", tor}});
  }
  return {{"groups", arr}, {"euler_characteristic", big(euler_characteristic())}};
}

mpz_class HomologySummary::euler_characteristic() const {
  mpz_class chi = 0;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    const mpz_class b = static_cast<unsigned long>(groups[d].betti);
    chi += d % 2 == 0 ? b : mpz_class(-b);
  }
  return chi;
}

std::size_t component_count(const CosetComplex& c) {
  std::vector<std::uint32_t> parent(c.vertices().size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = parent.size();
  if (c.dimension() >= 1)
    for (const auto& e : c.simplices()[1]) {
      const std::uint32_t a = find(e[0]), b = find(e[1]);
      if (a != b) parent[a] = b, --comps;
    }
  return comps;
}

DivisibilityReport divisibility_check(const FiniteGroup& g, unsigned q) {
  require_large_class(g, q);
  const NilpotentPoset p = build_lattice(g, q);
  DivisibilityReport r;
  r.m_q = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.records()[i].is_maximal) r.m_q = gcd(r.m_q, index_of(p, i));
  r.chi = euler_characteristic(g, q);
  r.divides = r.m_q != 0 && mpz_divisible_p(r.chi.get_mpz_t(), r.m_q.get_mpz_t());
  return r;
}

}  // namespace nilzeta
