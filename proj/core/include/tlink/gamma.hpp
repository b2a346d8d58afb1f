#pragma once

#include <utility>
#include <vector>

#include "tlink/thompson.hpp"
#include "tlink/tree.hpp"

namespace tlink {

/// Half-plane an edge of the signed plane graph is drawn in. Above edges come
/// from the plus tree (positive), below edges from the minus tree (negative).
enum class Side { above, below };

struct SignedEdge {
  int u = 0;  ///< left endpoint, u < v
  int v = 0;
  Side side = Side::above;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Plain undirected multigraph; loops and parallel edges allowed.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// One end of an edge as seen from a vertex.
struct EdgeEnd {
  int edge = 0;
  bool at_left = true;  ///< true for the u end of the edge

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Vertices 0..n-1 sit left to right on a horizontal line; each edge is a
/// semicircular arc above or below the line. Edges on one side are laminar
/// (pairwise nested or disjoint), which makes the drawing a plane embedding.
class SignedPlaneGraph {
 public:
  SignedPlaneGraph() = default;
  /// Throws DomainError on an edge with u >= v, an endpoint out of range, or a
  /// crossing pair of same-side arcs.
  SignedPlaneGraph(int vertex_count, std::vector<SignedEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  Multigraph underlying() const;

  /// Edge ends around vertex v, counterclockwise starting from the positive
  /// horizontal direction: above edges leaving rightward (innermost first),
  /// above edges arriving from the left (outermost first), below edges
  /// arriving from the left (innermost first), below edges leaving rightward
  /// (outermost first).
  std::vector<EdgeEnd> rotation(int v) const;

 private:
  int vertex_count_ = 0;
  std::vector<SignedEdge> edges_;
};

/// The rooted tree Gamma_+(T) on the leaf gaps of T: vertex 0 is the region
/// left of leaf 0, vertex i the gap just left of leaf i. Each caret spanning
/// leaves [a..c] whose right child starts at leaf s contributes the edge
/// (a, s). Edges are returned sorted.
std::vector<std::pair<int, int>> gamma_half(const Tree& t);

/// Gamma(T+, T-): above edges from gamma_half(plus), below edges from
/// gamma_half(minus). Edge order: above then below, each sorted by (u, v).
SignedPlaneGraph gamma_graph(const TreePair& p);

}  // namespace tlink
