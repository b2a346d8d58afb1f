#include <gtest/gtest.h>

#include <random>

#include "tlink/diagram.hpp"
#include "tlink/error.hpp"
#include "tlink/invariants.hpp"

using namespace tlink;

namespace {
TreePair w(const char* text) { return word_to_pair(parse_word(text)); }
}  // namespace

TEST(Diagram, ArcValidation) {
  EXPECT_THROW(LinkDiagram({{{0, 1, 2, 3}, CrossingType::slash_over}}, 4, 0), DomainError);
  EXPECT_NO_THROW(LinkDiagram({{{0, 0, 1, 1}, CrossingType::slash_over}}, 2, 0));
  EXPECT_THROW(LinkDiagram({}, 0, -1), DomainError);
}

TEST(Diagram, MedialShape) {
  for (const char* text : {"x0", "x1 x0^-1", "x1 x0^-1 x1 x0^-1", "x2 x0^-2"}) {
    const auto g = w(text);
    const auto graph = gamma_graph(g);
    const auto d = link_of(g);
    EXPECT_EQ(d.crossing_count(), static_cast<int>(graph.edges().size()));
    EXPECT_EQ(d.arc_count(), 2 * d.crossing_count());
    for (std::size_t k = 0; k < graph.edges().size(); ++k)
      EXPECT_EQ(d.crossings()[k].type,
                graph.edges()[k].side == Side::above ? CrossingType::slash_over : CrossingType::back_over);
  }
}

TEST(Diagram, Components) {
  EXPECT_EQ(component_count(link_of(identity_pair())), 1);
  EXPECT_EQ(link_of(identity_pair()).free_loops(), 1);
  EXPECT_EQ(component_count(link_of(w("x0^-1"))), 1);
  EXPECT_EQ(component_count(link_of(w("x1^-1"))), 2);
  EXPECT_EQ(component_count(link_of(w("x0^-1 x1 x0^-1"))), 2);
  EXPECT_EQ(component_count(link_of(w("x1 x0^-1 x1 x0^-1"))), 1);
  const TreePair id3(Tree::parse("((l l) l)"), Tree::parse("((l l) l)"));
  EXPECT_EQ(component_count(link_of_unreduced(id3)), 3);
  EXPECT_EQ(link_of(id3), link_of(identity_pair()));
}

TEST(Diagram, MirrorSwapsTypes) {
  const auto d = link_of(w("x1 x0^-1"));
  const auto m = mirror(d);
  ASSERT_EQ(m.crossing_count(), d.crossing_count());
  for (int k = 0; k < d.crossing_count(); ++k) EXPECT_EQ(m.crossings()[k].type, opposite(d.crossings()[k].type));
  EXPECT_EQ(mirror(m), d);
  EXPECT_EQ(bracket(m), bracket(d).substitute_inverse());
}

TEST(Diagram, InverseIsMirror) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_element(6, rng);
    EXPECT_EQ(bracket(link_of(invert(g))), bracket(mirror(link_of(g))));
  }
}

TEST(SemiLink, Shapes) {
  const auto leaf = upper_semilink(Tree::leaf());
  EXPECT_TRUE(leaf.through_strand);
  EXPECT_EQ(leaf.boundary_count, 2);
  EXPECT_TRUE(leaf.crossings.empty());

  const auto caret = upper_semilink(Tree::parse("(l l)"));
  EXPECT_FALSE(caret.through_strand);
  EXPECT_EQ(caret.boundary_count, 4);
  EXPECT_EQ(caret.arc_count, 4);
  ASSERT_EQ(caret.crossings.size(), 1u);
  EXPECT_EQ(caret.crossings[0].type, CrossingType::slash_over);

  for (int n = 2; n <= 6; ++n)
    for (const auto& t : all_trees(n)) {
      const auto s = upper_semilink(t);
      EXPECT_EQ(s.arc_count, 2 * n + (n - 2));
      std::vector<int> uses(s.arc_count, 0);
      for (const auto& c : s.crossings)
        for (int a : c.arcs) ++uses[a];
      for (int a = 0; a < s.arc_count; ++a) EXPECT_EQ(uses[a], a < s.boundary_count ? 1 : 2);
    }
}
