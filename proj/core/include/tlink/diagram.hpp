#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tlink/gamma.hpp"
#include "tlink/thompson.hpp"

namespace tlink {

/// slash_over: the strand through slots 0 and 2 (NE-SW) passes over.
/// back_over: the strand through slots 1 and 3 (NW-SE) passes over.
enum class CrossingType { slash_over, back_over };

CrossingType opposite(CrossingType t);

/// Four arc identifiers around a crossing, counterclockwise from NE:
/// slots 0 = NE, 1 = NW, 2 = SW, 3 = SE. Opposite slots (0,2) and (1,3) are
/// the two strands passing straight through.
struct Crossing {
  std::array<int, 4> arcs{};
  CrossingType type = CrossingType::slash_over;

  /// Slot pair carrying the over strand.
  std::pair<int, int> over_slots() const;
  std::pair<int, int> under_slots() const;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// An unoriented link diagram in planar-diagram form. Arcs are numbered
/// 0..arc_count-1 and each occupies exactly two crossing slots. Circles
/// without crossings are counted in free_loops.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws DomainError unless every arc appears in exactly two slots.
  LinkDiagram(std::vector<Crossing> crossings, int arc_count, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int free_loops() const { return free_loops_; }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int arc_count_ = 0;
  int free_loops_ = 0;
};

/// The medial link: one crossing per edge (crossing k belongs to edge k), one
/// arc per corner of the embedding, and one free loop per isolated vertex.
/// Above edges become slash_over crossings, below edges back_over.
LinkDiagram medial_link(const SignedPlaneGraph& g);

/// medial_link(gamma_graph(reduce(p))).
LinkDiagram link_of(const TreePair& p);
/// medial_link(gamma_graph(p)) on the representative as given.
LinkDiagram link_of_unreduced(const TreePair& p);

/// Swaps the crossing type at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

/// Closed strands (arcs joined straight through crossings) plus free loops.
int component_count(const LinkDiagram& d);

/// The upper half of a medial link cut along the horizontal line: the tangle
/// made by the crossings of gamma_half(t). Arcs 0..2n-1 are the boundary
/// half-arcs, ordered left to right (west then east of each vertex); the rest
/// are internal. With one leaf there are no crossings and the two boundary
/// ends are joined by a plain strand (through_strand is true).
struct SemiLink {
  std::vector<Crossing> crossings;
  int boundary_count = 0;
  int arc_count = 0;
  bool through_strand = false;
};

SemiLink upper_semilink(const Tree& t);

}  // namespace tlink
