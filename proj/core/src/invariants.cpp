#include "tlink/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <tuple>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tlink/error.hpp"
#include "tlink/union_find.hpp"

namespace tlink {

namespace {

// ---------------------------------------------------------------------------
// Chromatic counts on simple graphs, vertices as bit positions.

class ChromaticCounter {
 public:
  explicit ChromaticCounter(int q) : q_(q) {}

  BigInt count(std::vector<std::uint64_t> adj) {
    BigInt result = 1;
    for (auto& component : components(adj)) result *= connected(std::move(component));
    return result;
  }

 private:
  static std::vector<std::vector<std::uint64_t>> components(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < n; ++s) {
      if (label[s] >= 0) continue;
      groups.emplace_back();
      std::vector<int> stack{s};
      label[s] = static_cast<int>(groups.size()) - 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        groups.back().push_back(v);
        for (int w = 0; w < n; ++w)
          if ((adj[v] >> w & 1) && label[w] < 0) {
            label[w] = label[s];
            stack.push_back(w);
          }
      }
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& group : groups) {
      std::sort(group.begin(), group.end());
      std::vector<std::uint64_t> sub(group.size(), 0);
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j)
          if (adj[group[i]] >> group[j] & 1) sub[i] |= std::uint64_t{1} << j;
      out.push_back(std::move(sub));
    }
    return out;
  }

  // adj describes a connected simple graph.
  BigInt connected(std::vector<std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    int edges = 0;
    for (auto row : adj) edges += std::popcount(row);
    edges /= 2;
    if (edges == n - 1) return BigInt(q_) * ipow(BigInt(q_ - 1), n - 1);
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;

    // A pendant vertex contributes a factor Q-1.
    for (int v = 0; v < n; ++v)
      if (std::popcount(adj[v]) == 1) {
        BigInt value = BigInt(q_ - 1) * count(remove_vertex(adj, v));
        return memo_[adj] = value;
      }

    int u = 0;
    for (int v = 1; v < n; ++v)
      if (std::popcount(adj[v]) > std::popcount(adj[u])) u = v;
    int w = std::countr_zero(adj[u]);

    auto deleted = adj;
    deleted[u] &= ~(std::uint64_t{1} << w);
    deleted[w] &= ~(std::uint64_t{1} << u);
    BigInt value = count(std::move(deleted)) - count(contract(adj, u, w));
    return memo_[adj] = value;
  }

  static std::vector<std::uint64_t> remove_vertex(const std::vector<std::uint64_t>& adj, int v) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
      if (i == v) continue;
      out.push_back(drop_bit(adj[i], v));
    }
    return out;
  }

  // Merge w into u (u != w), dropping the resulting loop.
  static std::vector<std::uint64_t> contract(std::vector<std::uint64_t> adj, int u, int w) {
    for (int i = 0; i < static_cast<int>(adj.size()); ++i)
      if (adj[i] >> w & 1) {
        adj[i] |= std::uint64_t{1} << u;
        adj[u] |= std::uint64_t{1} << i;
      }
    adj[u] &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << w));
    return remove_vertex(adj, w);
  }

  static std::uint64_t drop_bit(std::uint64_t row, int v) {
    std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = row >> (v + 1);
    return low | (high << v);
  }

  int q_;
  std::map<std::vector<std::uint64_t>, BigInt> memo_;
};

// ---------------------------------------------------------------------------
// Tutte polynomial on multiplicity matrices.

using MultMatrix = std::vector<std::vector<int>>;

TuttePoly geometric_y(int k) {  // 1 + y + ... + y^(k-1)
  TuttePoly s;
  for (int i = 0; i < k; ++i) s += TuttePoly::monomial(1, 0, i);
  return s;
}

class TutteSolver {
 public:
  TuttePoly solve(const MultMatrix& m) {
    TuttePoly result = TuttePoly::one();
    for (auto& comp : components(m)) result *= connected(comp);
    return result;
  }

 private:
  static std::vector<MultMatrix> components(const MultMatrix& m) {
    const int n = static_cast<int>(m.size());
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m[i][j] > 0) uf.unite(i, j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<MultMatrix> out;
    for (auto& [root, members] : groups) {
      if (members.size() == 1) continue;
      out.push_back(submatrix(m, members));
    }
    return out;
  }

  static MultMatrix submatrix(const MultMatrix& m, const std::vector<int>& keep) {
    MultMatrix sub(keep.size(), std::vector<int>(keep.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) sub[i][j] = m[keep[i]][keep[j]];
    return sub;
  }

  // Relabel by (degree, distinct-neighbour count) so that common minors
  // share a memo entry more often; the key is the full matrix.
  static MultMatrix canonical(const MultMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::pair<std::pair<int, int>, int>> order;
    for (int i = 0; i < n; ++i) {
      int deg = 0;
      int nbrs = 0;
      for (int j = 0; j < n; ++j) {
        deg += m[i][j];
        nbrs += m[i][j] > 0;
      }
      order.push_back({{deg, nbrs}, i});
    }
    std::stable_sort(order.begin(), order.end());
    std::vector<int> perm;
    for (auto& item : order) perm.push_back(item.second);
    return submatrix(m, perm);
  }

  static bool separated_without(const MultMatrix& m, int u, int v) {
    const int n = static_cast<int>(m.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b) {
        if (m[a][b] == 0 || seen[b]) continue;
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (b == v) return false;
        seen[b] = true;
        stack.push_back(b);
      }
    }
    return true;
  }

  static MultMatrix contract(const MultMatrix& m, int u, int v) {
    const int n = static_cast<int>(m.size());
    MultMatrix merged = m;
    for (int i = 0; i < n; ++i) {
      if (i == u || i == v) continue;
      merged[u][i] += m[v][i];
      merged[i][u] += m[i][v];
    }
    merged[u][v] = merged[v][u] = 0;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != v) keep.push_back(i);
    return submatrix(merged, keep);
  }

  // m is connected, loopless, with at least two vertices.
  TuttePoly connected(const MultMatrix& raw) {
    MultMatrix m = canonical(raw);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    const int n = static_cast<int>(m.size());

    // Branch on a parallel class at a vertex with fewest distinct neighbours.
    int u = 0;
    int best = n + 1;
    for (int i = 0; i < n; ++i) {
      int nbrs = 0;
      for (int j = 0; j < n; ++j) nbrs += m[i][j] > 0;
      if (nbrs < best) {
        best = nbrs;
        u = i;
      }
    }
    int v = 0;
    while (m[u][v] == 0) ++v;
    const int k = m[u][v];

    TuttePoly value;
    if (separated_without(m, u, v)) {
      value = (TuttePoly::x() + TuttePoly::monomial(1, 0, 1) * geometric_y(k - 1)) *
              solve(contract(m, u, v));
    } else {
      MultMatrix deleted = m;
      deleted[u][v] = deleted[v][u] = 0;
      value = solve(deleted) + geometric_y(k) * solve(contract(m, u, v));
    }
    return memo_[m] = value;
  }

  std::map<MultMatrix, TuttePoly> memo_;
};

// ---------------------------------------------------------------------------
// Bracket state sum.

// Slot pairs joined by the A-smoothing and the B-smoothing. For the crossing
// with over strand through slots c0, c2 (c0..c3 counterclockwise) the
// A-smoothing joins c1-c2 and c3-c0.
struct Smoothings {
  std::array<std::pair<int, int>, 2> a;
  std::array<std::pair<int, int>, 2> b;
};

Smoothings smoothings(const Crossing& c) {
  const auto& s = c.arcs;
  if (c.type == CrossingType::slash_over)
    return {{{{s[1], s[2]}, {s[3], s[0]}}}, {{{s[0], s[1]}, {s[2], s[3]}}}};
  return {{{{s[0], s[1]}, {s[2], s[3]}}}, {{{s[1], s[2]}, {s[3], s[0]}}}};
}

class StateSum {
 public:
  explicit StateSum(const LinkDiagram& d)
      : uf_(d.arc_count()),
        crossings_(d.crossing_count()),
        histogram_((crossings_ + 1) * (d.arc_count() + 1), 0) {
    for (const auto& c : d.crossings()) smooth_.push_back(smoothings(c));
  }

  // histogram[a * (arcs + 1) + loops] = number of states with a A-smoothings.
  const std::vector<std::uint64_t>& run() {
    descend(0, 0);
    return histogram_;
  }

 private:
  void descend(int k, int a_count) {
    if (k == crossings_) {
      ++histogram_[a_count * (stride()) + uf_.sets()];
      return;
    }
    for (int choice = 0; choice < 2; ++choice) {
      const auto& pairs = choice == 0 ? smooth_[k].a : smooth_[k].b;
      uf_.unite(pairs[0].first, pairs[0].second);
      uf_.unite(pairs[1].first, pairs[1].second);
      descend(k + 1, a_count + (choice == 0));
      uf_.undo();
      uf_.undo();
    }
  }

  int stride() const { return static_cast<int>(histogram_.size()) / (crossings_ + 1); }

  detail::RollbackUnionFind uf_;
  int crossings_;
  std::vector<Smoothings> smooth_;
  std::vector<std::uint64_t> histogram_;
};

// ---------------------------------------------------------------------------
// Linear algebra mod q.

std::int64_t mod(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t quot = a / b;
    std::tie(a, b) = std::pair{b, a - quot * b};
    std::tie(s0, s1) = std::pair{s1, s0 - quot * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - quot * t1};
  }
  return {a, s0, t0};
}

// Coefficients for the unimodular 2x2 step on a pivot p and entry e. When
// p divides e this is plain elimination, so the pivot row is left alone.
std::array<std::int64_t, 3> combination(std::int64_t p, std::int64_t e) {
  if (e % p == 0) return {p, 1, 0};
  return ext_gcd(p, e);
}

// Number of solutions x in (Z/q)^cols of M x = 0. Diagonalizes M by
// unimodular row and column operations mod q.
BigInt solution_count(std::vector<std::vector<std::int64_t>> m, int cols, std::int64_t q) {
  const int rows = static_cast<int>(m.size());
  for (auto& row : m)
    for (auto& e : row) e = mod(e, q);
  BigInt count = 1;
  int pivot = 0;
  for (; pivot < rows && pivot < cols; ++pivot) {
    // Find any nonzero entry in the trailing block.
    int pr = -1, pc = -1;
    for (int i = pivot; i < rows && pr < 0; ++i)
      for (int j = pivot; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(m[pivot], m[pr]);
    for (auto& row : m) std::swap(row[pivot], row[pc]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = pivot + 1; i < rows; ++i) {
        if (m[i][pivot] == 0) continue;
        auto [g, s, t] = combination(m[pivot][pivot], m[i][pivot]);
        std::int64_t a = m[pivot][pivot] / g;
        std::int64_t b = m[i][pivot] / g;
        for (int j = pivot; j < cols; ++j) {
          std::int64_t top = m[pivot][j];
          std::int64_t bot = m[i][j];
          m[pivot][j] = mod(s * top + t * bot, q);
          m[i][j] = mod(-b * top + a * bot, q);
        }
      }
      for (int j = pivot + 1; j < cols; ++j) {
        if (m[pivot][j] == 0) continue;
        auto [g, s, t] = combination(m[pivot][pivot], m[pivot][j]);
        std::int64_t a = m[pivot][pivot] / g;
        std::int64_t b = m[pivot][j] / g;
        for (int i = pivot; i < rows; ++i) {
          std::int64_t left = m[i][pivot];
          std::int64_t right = m[i][j];
          m[i][pivot] = mod(s * left + t * right, q);
          m[i][j] = mod(-b * left + a * right, q);
        }
        for (int i = pivot + 1; i < rows; ++i)
          if (m[i][pivot] != 0) dirty = true;
      }
      if (m[pivot][pivot] == 0) {
        // Everything in this row and column collapsed to 0 mod q.
        bool any = false;
        for (int i = pivot + 1; i < rows; ++i) any |= m[i][pivot] != 0;
        if (!any) break;
        dirty = true;
        // Bring a nonzero entry up.
        for (int i = pivot + 1; i < rows; ++i)
          if (m[i][pivot] != 0) {
            std::swap(m[pivot], m[i]);
            break;
          }
      }
    }
    count *= std::gcd(m[pivot][pivot], q);
  }
  count *= ipow(BigInt(q), cols - pivot);
  return count;
}

}  // namespace

BigInt chromatic(const Multigraph& g, int q) {
  if (q < 0) throw DomainError("colour count must be nonnegative");
  if (g.vertex_count > 64) throw CapExceeded("chromatic supports at most 64 vertices");
  std::vector<std::uint64_t> adj(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    if (u == v) return 0;
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  if (g.vertex_count == 0) return 1;
  return ChromaticCounter(q).count(std::move(adj));
}

TuttePoly tutte(const Multigraph& g) {
  MultMatrix m(g.vertex_count, std::vector<int>(g.vertex_count, 0));
  int loops = 0;
  for (auto [u, v] : g.edges) {
    if (u == v) {
      ++loops;
      continue;
    }
    ++m[u][v];
    ++m[v][u];
  }
  return TuttePoly::y().pow(loops) * TutteSolver().solve(m);
}

LaurentPoly bracket(const LinkDiagram& d, int max_crossings) {
  const int c = d.crossing_count();
  if (c > max_crossings)
    throw CapExceeded("bracket state sum cap exceeded: " + std::to_string(c) + " crossings");
  if (c == 0 && d.free_loops() == 0) throw DomainError("empty diagram");
  StateSum sum(d);
  const auto& histogram = sum.run();
  const int stride = d.arc_count() + 1;

  std::vector<LaurentPoly> loop_power{LaurentPoly::constant(1)};
  const auto loop = LaurentPoly::loop_value();
  LaurentPoly result;
  for (int a = 0; a <= c; ++a)
    for (int loops = 0; loops < stride; ++loops) {
      auto n = histogram[a * stride + loops];
      if (n == 0) continue;
      int total = loops + d.free_loops() - 1;
      while (static_cast<int>(loop_power.size()) <= total) loop_power.push_back(loop_power.back() * loop);
      result += LaurentPoly::monomial(static_cast<std::int64_t>(n), 2 * a - c) * loop_power[total];
    }
  return result;
}

BigInt col_count(const LinkDiagram& d, int q) {
  if (q < 1 || q % 2 == 0) throw DomainError("Fox colourings need an odd positive Q");
  detail::UnionFind over(d.arc_count());
  for (const auto& c : d.crossings()) {
    auto [o1, o2] = c.over_slots();
    over.unite(c.arcs[o1], c.arcs[o2]);
  }
  std::map<int, int> column;
  for (int a = 0; a < d.arc_count(); ++a) column.try_emplace(over.find(a), static_cast<int>(column.size()));
  const int cols = static_cast<int>(column.size());

  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& c : d.crossings()) {
    std::vector<std::int64_t> row(cols, 0);
    auto [o1, o2] = c.over_slots();
    auto [u1, u2] = c.under_slots();
    row[column[over.find(c.arcs[o1])]] += 2;
    row[column[over.find(c.arcs[u1])]] -= 1;
    row[column[over.find(c.arcs[u2])]] -= 1;
    (void)o2;
    rows.push_back(std::move(row));
  }
  return solution_count(std::move(rows), cols, q) * ipow(BigInt(q), d.free_loops());
}

Rational NormalizedValue::exact() const {
  const int n = leaves;
  switch (kind) {
    case InvariantKind::chromatic:
      return Rational(std::get<BigInt>(raw)) / Rational(ipow(BigInt(q - 1), n - 1));
    case InvariantKind::colourings:
      return Rational(std::get<BigInt>(raw)) / Rational(ipow(BigInt(q), n));
    default:
      throw DomainError("exact value needs a counting invariant");
  }
}

double NormalizedValue::at(double x, double y) const {
  if (kind != InvariantKind::tutte_potts) throw DomainError("not a Tutte value");
  if (x + y == 0.0) throw DomainError("x + y must be nonzero");
  return std::get<TuttePoly>(raw).evaluate(x, y) / std::pow(x + y, leaves - 1);
}

Rational NormalizedValue::at(const Rational& x, const Rational& y) const {
  if (kind != InvariantKind::tutte_potts) throw DomainError("not a Tutte value");
  const Rational sum = x + y;
  if (sum == 0) throw DomainError("x + y must be nonzero");
  Rational scale = 1;
  for (int k = 0; k < leaves - 1; ++k) scale *= sum;
  return std::get<TuttePoly>(raw).evaluate(x, y) / scale;
}

std::complex<double> NormalizedValue::at(std::complex<double> a) const {
  if (kind != InvariantKind::bracket) throw DomainError("not a bracket value");
  const std::complex<double> d = -a * a - 1.0 / (a * a);
  if (std::abs(d) < 1e-12) throw DomainError("loop value -A^2 - A^-2 vanishes");
  return std::get<LaurentPoly>(raw).evaluate(a) / std::pow(d, leaves);
}

NormalizedValue normalized_value(const TreePair& representative, InvariantKind kind, int q) {
  NormalizedValue v;
  v.kind = kind;
  v.leaves = representative.leaf_count();
  v.q = q;
  switch (kind) {
    case InvariantKind::chromatic:
      if (q < 2) throw DomainError("chromatic normalization needs Q >= 2");
      v.raw = chromatic(gamma_graph(representative).underlying(), q);
      break;
    case InvariantKind::tutte_potts:
      v.raw = tutte(gamma_graph(representative).underlying());
      break;
    case InvariantKind::bracket:
      v.raw = bracket(link_of_unreduced(representative));
      break;
    case InvariantKind::colourings:
      v.raw = col_count(link_of_unreduced(representative), q);
      break;
  }
  return v;
}

Rational chr_fn(const TreePair& g, int q) {
  return normalized_value(g, InvariantKind::chromatic, q).exact();
}

Rational tutte_fn(const TreePair& g, const Rational& x, const Rational& y) {
  if (x + y == 0) throw DomainError("x + y must be nonzero");
  return normalized_value(g, InvariantKind::tutte_potts).at(x, y);
}

double tutte_fn(const TreePair& g, double x, double y) {
  if (x + y == 0.0) throw DomainError("x + y must be nonzero");
  return normalized_value(g, InvariantKind::tutte_potts).at(x, y);
}

std::complex<double> bracket_fn(const TreePair& g, std::complex<double> a) {
  const std::complex<double> d = -a * a - 1.0 / (a * a);
  if (std::abs(d) < 1e-12) throw DomainError("loop value -A^2 - A^-2 vanishes");
  return normalized_value(g, InvariantKind::bracket).at(a);
}

Rational colq_fn(const TreePair& g, int q) {
  if (q < 1 || q % 2 == 0) throw DomainError("Fox colourings need an odd positive Q");
  return normalized_value(g, InvariantKind::colourings, q).exact();
}

}  // namespace tlink
