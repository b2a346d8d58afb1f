#include "tlink/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "tlink/error.hpp"
#include "tlink/invariants.hpp"
#include "tlink/union_find.hpp"

namespace tlink {

namespace {

// Advances a base-q odometer; returns false after the last configuration.
bool next_config(std::vector<int>& digits, int q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

bool crossing_weight(const Crossing& c, const std::vector<int>& label, int q) {
  auto [o1, o2] = c.over_slots();
  auto [u1, u2] = c.under_slots();
  const int over = label[c.arcs[o1]];
  if (label[c.arcs[o2]] != over) return false;
  return (2 * over - label[c.arcs[u1]] - label[c.arcs[u2]]) % q == 0;
}

void require_q(int q) {
  if (q < 1) throw DomainError("Q must be positive");
}

}  // namespace

std::uint64_t checked_power(int q, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > cap) throw CapExceeded("enumeration size " + std::to_string(q) + "^" + std::to_string(k) +
                                       " exceeds cap " + std::to_string(cap));
  }
  return total;
}

std::vector<std::uint8_t> chromatic_vector(const Tree& t, int q, std::uint64_t cap) {
  require_q(q);
  const int n = t.leaf_count();
  const auto size = checked_power(q, n, cap);
  const auto edges = gamma_half(t);
  std::vector<std::uint8_t> out(size, 0);
  std::vector<int> sigma(n, 0);
  std::size_t index = 0;
  do {
    bool proper = true;
    for (auto [u, v] : edges) proper = proper && sigma[u] != sigma[v];
    out[index++] = proper;
  } while (next_config(sigma, q));
  return out;
}

double potts_partition(const Multigraph& g, int q, double k, std::uint64_t cap) {
  require_q(q);
  checked_power(q, g.vertex_count, cap);
  // Exact histogram over the number of bichromatic edges first.
  std::vector<std::uint64_t> histogram(g.edges.size() + 1, 0);
  std::vector<int> sigma(g.vertex_count, 0);
  do {
    std::size_t differ = 0;
    for (auto [u, v] : g.edges) differ += sigma[u] != sigma[v];
    ++histogram[differ];
  } while (next_config(sigma, q));
  double z = 0;
  for (std::size_t m = 0; m < histogram.size(); ++m)
    z += static_cast<double>(histogram[m]) * std::exp(-k * static_cast<double>(m));
  return z;
}

bool is_bracket_root(int q, std::complex<double> a, double tol) {
  const auto a2 = a * a;
  return std::abs(a2 * a2 + std::sqrt(static_cast<double>(q)) * a2 + 1.0) <= tol;
}

std::complex<double> kauffman_partition(const SignedPlaneGraph& g, int q, std::complex<double> a,
                                        std::uint64_t cap) {
  if (q < 2) throw DomainError("Q must be at least 2");
  if (!is_bracket_root(q, a)) throw DomainError("A is not a root of A^4 + sqrt(Q) A^2 + 1");
  const int n = g.vertex_count();
  checked_power(q, n, cap);
  const auto& edges = g.edges();
  int above = 0;
  for (const auto& e : edges) above += e.side == Side::above;
  const int below = static_cast<int>(edges.size()) - above;

  // histogram[(equal above) * (below + 1) + (equal below)]
  std::vector<std::uint64_t> histogram((above + 1) * (below + 1), 0);
  std::vector<int> sigma(n, 0);
  do {
    int eq_above = 0;
    int eq_below = 0;
    for (const auto& e : edges) {
      if (sigma[e.u] != sigma[e.v]) continue;
      (e.side == Side::above ? eq_above : eq_below) += 1;
    }
    ++histogram[eq_above * (below + 1) + eq_below];
  } while (next_config(sigma, q));

  const std::complex<double> same = -a * a * a;
  const std::complex<double> differ = 1.0 / a;
  std::complex<double> total = 0;
  for (int sa = 0; sa <= above; ++sa)
    for (int sb = 0; sb <= below; ++sb) {
      auto count = histogram[sa * (below + 1) + sb];
      if (count == 0) continue;
      auto weight = std::pow(same, sb) * std::pow(differ, below - sb) * std::pow(1.0 / same, sa) *
                    std::pow(1.0 / differ, above - sa);
      total += static_cast<double>(count) * weight;
    }
  return total * std::pow(static_cast<double>(q), -(n + 1) / 2.0);
}

std::vector<std::complex<double>> kauffman_vector(const Tree& t, int q, std::complex<double> a,
                                                  std::uint64_t cap) {
  if (q < 2) throw DomainError("Q must be at least 2");
  if (!is_bracket_root(q, a)) throw DomainError("A is not a root of A^4 + sqrt(Q) A^2 + 1");
  const int n = t.leaf_count();
  const auto size = checked_power(q, n, cap);
  const auto edges = gamma_half(t);
  const std::complex<double> same_inv = 1.0 / (-a * a * a);
  const std::complex<double> differ_inv = a;
  std::vector<std::complex<double>> out(size);
  std::vector<int> sigma(n, 0);
  std::size_t index = 0;
  do {
    std::complex<double> entry = 1;
    for (auto [u, v] : edges) entry *= sigma[u] == sigma[v] ? same_inv : differ_inv;
    out[index++] = entry;
  } while (next_config(sigma, q));
  return out;
}

namespace {

class ColouringSearch {
 public:
  ColouringSearch(const LinkDiagram& d, int q, std::uint64_t node_cap)
      : d_(d), q_(q), node_cap_(node_cap), label_(d.arc_count(), -1) {
    // Visit arcs crossing by crossing so constraints close early.
    std::vector<bool> seen(d.arc_count(), false);
    for (const auto& c : d.crossings())
      for (int arc : c.arcs)
        if (!seen[arc]) {
          seen[arc] = true;
          order_.push_back(arc);
        }
    for (int arc = 0; arc < d.arc_count(); ++arc)
      if (!seen[arc]) order_.push_back(arc);
    std::vector<int> position(d.arc_count());
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = static_cast<int>(i);

    closes_.resize(order_.size());
    over_ready_.resize(order_.size());
    for (int k = 0; k < d.crossing_count(); ++k) {
      const auto& c = d.crossings()[k];
      int last = 0;
      for (int arc : c.arcs) last = std::max(last, position[arc]);
      closes_[last].push_back(k);
      auto [o1, o2] = c.over_slots();
      over_ready_[std::max(position[c.arcs[o1]], position[c.arcs[o2]])].push_back(k);
    }
  }

  BigInt run() {
    descend(0);
    return BigInt(count_) * ipow(BigInt(q_), d_.free_loops());
  }

 private:
  void descend(std::size_t depth) {
    if (++nodes_ > node_cap_) throw CapExceeded("colouring search exceeded node cap");
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const int arc = order_[depth];
    for (int colour = 0; colour < q_; ++colour) {
      label_[arc] = colour;
      if (consistent(depth)) descend(depth + 1);
    }
    label_[arc] = -1;
  }

  bool consistent(std::size_t depth) const {
    for (int k : over_ready_[depth]) {
      const auto& c = d_.crossings()[k];
      auto [o1, o2] = c.over_slots();
      if (label_[c.arcs[o1]] != label_[c.arcs[o2]]) return false;
    }
    for (int k : closes_[depth])
      if (!crossing_weight(d_.crossings()[k], label_, q_)) return false;
    return true;
  }

  const LinkDiagram& d_;
  int q_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  std::vector<int> label_;
  std::vector<int> order_;
  std::vector<std::vector<int>> closes_;
  std::vector<std::vector<int>> over_ready_;
};

}  // namespace

BigInt colouring_partition(const LinkDiagram& d, int q, std::uint64_t node_cap) {
  require_q(q);
  return ColouringSearch(d, q, node_cap).run();
}

std::vector<std::uint64_t> fox_semilink_vector(const Tree& t, int q, std::uint64_t cap) {
  require_q(q);
  const auto semi = upper_semilink(t);
  const int boundary = semi.boundary_count;
  const auto size = checked_power(q, boundary, cap);
  std::vector<std::uint64_t> out(size, 0);
  std::vector<int> label(semi.arc_count, 0);

  if (semi.through_strand) {
    std::size_t index = 0;
    std::vector<int> tau(boundary, 0);
    do {
      out[index++] = tau[0] == tau[1];
    } while (next_config(tau, q));
    return out;
  }

  const int internal = semi.arc_count - boundary;
  checked_power(q, boundary + internal, cap * 10);
  std::vector<int> tau(boundary, 0);
  std::size_t index = 0;
  do {
    std::copy(tau.begin(), tau.end(), label.begin());
    std::vector<int> inner(internal, 0);
    std::uint64_t sum = 0;
    do {
      std::copy(inner.begin(), inner.end(), label.begin() + boundary);
      bool ok = true;
      for (const auto& c : semi.crossings)
        if (!crossing_weight(c, label, q)) {
          ok = false;
          break;
        }
      sum += ok;
    } while (next_config(inner, q));
    out[index++] = sum;
  } while (next_config(tau, q));
  return out;
}

std::vector<ChromaticLimitRow> chromatic_limit_check(const Multigraph& g, int q, std::span<const double> ks,
                                                     std::uint64_t cap) {
  require_q(q);
  checked_power(q, g.vertex_count, cap);
  // histogram over the number of monochromatic edges
  std::vector<std::uint64_t> histogram(g.edges.size() + 1, 0);
  std::vector<int> sigma(g.vertex_count, 0);
  do {
    std::size_t same = 0;
    for (auto [u, v] : g.edges) same += sigma[u] == sigma[v];
    ++histogram[same];
  } while (next_config(sigma, q));

  const double chr = to_double(chromatic(g, q));
  std::vector<ChromaticLimitRow> rows;
  for (double k : ks) {
    ChromaticLimitRow row;
    row.k = k;
    for (std::size_t m = 0; m < histogram.size(); ++m)
      row.scaled += static_cast<double>(histogram[m]) * std::exp(k * static_cast<double>(m));
    row.residual = std::abs(row.scaled - chr);
    row.relative = row.residual / std::max(1.0, chr);
    rows.push_back(row);
  }
  return rows;
}

TuttePoly tutte_rank_nullity(const Multigraph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 24) throw CapExceeded("subset expansion supports at most 24 edges");
  auto rank = [&](std::uint32_t subset) {
    detail::UnionFind uf(g.vertex_count);
    int r = 0;
    for (int e = 0; e < m; ++e)
      if (subset >> e & 1) r += uf.unite(g.edges[e].first, g.edges[e].second);
    return r;
  };
  const int full = rank(m == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1));
  std::map<std::pair<int, int>, std::int64_t> counts;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const int r = rank(static_cast<std::uint32_t>(s));
    ++counts[{full - r, std::popcount(s) - r}];
  }
  const TuttePoly xm1 = TuttePoly::x() + TuttePoly::monomial(-1, 0, 0);
  const TuttePoly ym1 = TuttePoly::y() + TuttePoly::monomial(-1, 0, 0);
  TuttePoly result;
  for (auto [key, c] : counts)
    result += TuttePoly::monomial(c, 0, 0) * xm1.pow(key.first) * ym1.pow(key.second);
  return result;
}

namespace {

struct SkeinKey {
  std::vector<int> slots;
  std::vector<std::uint8_t> types;
  auto operator<=>(const SkeinKey&) const = default;
};

class Skein {
 public:
  // Sum over states of A^(#A - #B) d^(loops - 1); needs at least one crossing.
  LaurentPoly value(const std::vector<Crossing>& crossings) {
    auto key = canonical(crossings);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto& c = crossings.front();
    const auto& s = c.arcs;
    // A-smoothing joins slots (1,2),(3,0) when slot 0-2 passes over.
    std::array<std::array<std::pair<int, int>, 2>, 2> joins{
        {{{{s[1], s[2]}, {s[3], s[0]}}}, {{{s[0], s[1]}, {s[2], s[3]}}}}};
    if (c.type == CrossingType::back_over) std::swap(joins[0], joins[1]);

    LaurentPoly total;
    for (int choice = 0; choice < 2; ++choice) {
      std::vector<Crossing> next(crossings.begin() + 1, crossings.end());
      auto [first, second] = joins[choice];
      int closed = 0;
      // Joining two ends of one arc closes a loop; otherwise the second
      // label is renamed to the first.
      auto join = [&](int a, int b) {
        if (a == b) {
          ++closed;
          return;
        }
        for (auto& x : next)
          for (auto& arc : x.arcs)
            if (arc == b) arc = a;
        if (second.first == b) second.first = a;
        if (second.second == b) second.second = a;
      };
      join(first.first, first.second);
      join(second.first, second.second);

      LaurentPoly term = LaurentPoly::monomial(1, choice == 0 ? 1 : -1);
      if (next.empty())
        term *= LaurentPoly::loop_value().pow(closed - 1);
      else
        term *= LaurentPoly::loop_value().pow(closed) * value(next);
      total += term;
    }
    return memo_[std::move(key)] = total;
  }

 private:
  static SkeinKey canonical(const std::vector<Crossing>& crossings) {
    SkeinKey key;
    std::map<int, int> relabel;
    for (const auto& c : crossings) {
      for (int arc : c.arcs) {
        auto it = relabel.try_emplace(arc, static_cast<int>(relabel.size())).first;
        key.slots.push_back(it->second);
      }
      key.types.push_back(static_cast<std::uint8_t>(c.type));
    }
    return key;
  }

  std::map<SkeinKey, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly bracket_skein(const LinkDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.free_loops() == 0) throw DomainError("empty diagram");
    return LaurentPoly::loop_value().pow(d.free_loops() - 1);
  }
  return Skein().value(d.crossings()) * LaurentPoly::loop_value().pow(d.free_loops());
}

}  // namespace tlink
