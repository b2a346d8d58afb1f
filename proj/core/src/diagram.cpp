#include "tlink/diagram.hpp"

#include <string>

#include "tlink/error.hpp"
#include "tlink/union_find.hpp"

namespace tlink {

namespace {

enum Slot { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };

// The corner counterclockwise of an edge end meets the crossing at the NW
// slot (left end) or SE slot (right end); the clockwise corner at SW or NE.
int ccw_slot(const EdgeEnd& end) { return end.at_left ? kNW : kSE; }
int cw_slot(const EdgeEnd& end) { return end.at_left ? kSW : kNE; }

CrossingType type_for(Side side) {
  return side == Side::above ? CrossingType::slash_over : CrossingType::back_over;
}

}  // namespace

CrossingType opposite(CrossingType t) {
  return t == CrossingType::slash_over ? CrossingType::back_over : CrossingType::slash_over;
}

std::pair<int, int> Crossing::over_slots() const {
  return type == CrossingType::slash_over ? std::pair{kNE, kSW} : std::pair{kNW, kSE};
}

std::pair<int, int> Crossing::under_slots() const {
  return type == CrossingType::slash_over ? std::pair{kNW, kSE} : std::pair{kNE, kSW};
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int arc_count, int free_loops)
    : crossings_(std::move(crossings)), arc_count_(arc_count), free_loops_(free_loops) {
  if (arc_count_ < 0 || free_loops_ < 0) throw DomainError("negative arc or loop count");
  std::vector<int> uses(arc_count_, 0);
  for (const auto& c : crossings_)
    for (int a : c.arcs) {
      if (a < 0 || a >= arc_count_) throw DomainError("arc id out of range");
      ++uses[a];
    }
  for (int a = 0; a < arc_count_; ++a)
    if (uses[a] != 2)
      throw DomainError("arc " + std::to_string(a) + " occupies " + std::to_string(uses[a]) +
                        " slots");
}

LinkDiagram medial_link(const SignedPlaneGraph& g) {
  std::vector<Crossing> crossings(g.edges().size());
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    crossings[k].type = type_for(g.edges()[k].side);
  int arcs = 0;
  int free_loops = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto ends = g.rotation(v);
    if (ends.empty()) {
      ++free_loops;
      continue;
    }
    for (std::size_t k = 0; k < ends.size(); ++k) {
      const auto& from = ends[k];
      const auto& to = ends[(k + 1) % ends.size()];
      crossings[from.edge].arcs[ccw_slot(from)] = arcs;
      crossings[to.edge].arcs[cw_slot(to)] = arcs;
      ++arcs;
    }
  }
  return LinkDiagram(std::move(crossings), arcs, free_loops);
}

LinkDiagram link_of(const TreePair& p) { return medial_link(gamma_graph(reduce(p))); }

LinkDiagram link_of_unreduced(const TreePair& p) { return medial_link(gamma_graph(p)); }

LinkDiagram mirror(const LinkDiagram& d) {
  auto crossings = d.crossings();
  for (auto& c : crossings) c.type = opposite(c.type);
  return LinkDiagram(std::move(crossings), d.arc_count(), d.free_loops());
}

int component_count(const LinkDiagram& d) {
  detail::UnionFind uf(d.arc_count());
  for (const auto& c : d.crossings()) {
    uf.unite(c.arcs[kNE], c.arcs[kSW]);
    uf.unite(c.arcs[kNW], c.arcs[kSE]);
  }
  return uf.sets() + d.free_loops();
}

SemiLink upper_semilink(const Tree& t) {
  const int n = t.leaf_count();
  SemiLink s;
  s.boundary_count = 2 * n;
  if (n == 1) {
    s.arc_count = 2;
    s.through_strand = true;
    return s;
  }
  std::vector<SignedEdge> edges;
  for (auto [u, v] : gamma_half(t)) edges.push_back({u, v, Side::above});
  const SignedPlaneGraph half(n, edges);
  s.crossings.resize(edges.size());
  int next = s.boundary_count;
  for (int v = 0; v < n; ++v) {
    auto ends = half.rotation(v);
    // Every vertex meets the spanning tree; ends run east, north, west.
    for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
      s.crossings[ends[k].edge].arcs[ccw_slot(ends[k])] = next;
      s.crossings[ends[k + 1].edge].arcs[cw_slot(ends[k + 1])] = next;
      ++next;
    }
    s.crossings[ends.back().edge].arcs[ccw_slot(ends.back())] = 2 * v;
    s.crossings[ends.front().edge].arcs[cw_slot(ends.front())] = 2 * v + 1;
  }
  s.arc_count = next;
  return s;
}

}  // namespace tlink
