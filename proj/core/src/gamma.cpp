#include "tlink/gamma.hpp"

#include <algorithm>
#include <tuple>

#include "tlink/error.hpp"

namespace tlink {

namespace {

bool arcs_cross(const SignedEdge& a, const SignedEdge& b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

int collect_half(const std::vector<std::uint8_t>& code, std::size_t& pos, int first_leaf,
                 std::vector<std::pair<int, int>>& out) {
  if (code[pos++] == 0) return 1;
  int left = collect_half(code, pos, first_leaf, out);
  int right = collect_half(code, pos, first_leaf + left, out);
  out.emplace_back(first_leaf, first_leaf + left);
  return left + right;
}

}  // namespace

SignedPlaneGraph::SignedPlaneGraph(int vertex_count, std::vector<SignedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw DomainError("negative vertex count");
  for (const auto& e : edges_)
    if (e.u < 0 || e.u >= e.v || e.v >= vertex_count_) throw DomainError("invalid arc endpoints");
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i].side == edges_[j].side && arcs_cross(edges_[i], edges_[j]))
        throw DomainError("same-side arcs cross");
}

Multigraph SignedPlaneGraph::underlying() const {
  Multigraph g{vertex_count_, {}};
  g.edges.reserve(edges_.size());
  for (const auto& e : edges_) g.edges.emplace_back(e.u, e.v);
  return g;
}

std::vector<EdgeEnd> SignedPlaneGraph::rotation(int v) const {
  // (sector, key) orders the ends; sectors follow the counterclockwise sweep.
  std::vector<std::tuple<int, int, EdgeEnd>> ends;
  for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
    const auto& e = edges_[k];
    bool above = e.side == Side::above;
    if (e.u == v) ends.emplace_back(above ? 0 : 3, above ? e.v : -e.v, EdgeEnd{k, true});
    if (e.v == v) ends.emplace_back(above ? 1 : 2, above ? e.u : -e.u, EdgeEnd{k, false});
  }
  std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<EdgeEnd> result;
  result.reserve(ends.size());
  for (const auto& item : ends) result.push_back(std::get<2>(item));
  return result;
}

std::vector<std::pair<int, int>> gamma_half(const Tree& t) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  collect_half(t.code(), pos, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

SignedPlaneGraph gamma_graph(const TreePair& p) {
  std::vector<SignedEdge> edges;
  for (auto [u, v] : gamma_half(p.plus())) edges.push_back({u, v, Side::above});
  for (auto [u, v] : gamma_half(p.minus())) edges.push_back({u, v, Side::below});
  return SignedPlaneGraph(p.leaf_count(), std::move(edges));
}

}  // namespace tlink
