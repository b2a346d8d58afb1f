#include <gtest/gtest.h>

#include <random>

#include "tlink/error.hpp"
#include "tlink/invariants.hpp"
#include "tlink/oracles.hpp"

using namespace tlink;

namespace {

TreePair w(const char* text) { return word_to_pair(parse_word(text)); }

Multigraph triangle() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }

std::vector<TreePair> small_pairs(int leaves) {
  std::vector<TreePair> all;
  for (int n = 1; n <= leaves; ++n)
    for (auto& p : enumerate_reduced_pairs(n)) all.push_back(p);
  return all;
}

}  // namespace

TEST(Chromatic, SmallGraphs) {
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(chromatic(triangle(), q), BigInt(q * (q - 1) * (q - 2)));
  const Multigraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(chromatic(c4, q), BigInt((q - 1) * (q - 1) * (q - 1) * (q - 1) + (q - 1)));
  EXPECT_EQ(chromatic({2, {{0, 1}, {0, 1}}}, 3), 6);
  EXPECT_EQ(chromatic({2, {{0, 0}}}, 3), 0);
  EXPECT_EQ(chromatic({3, {}}, 3), 27);
  // K4 plus isolated vertex
  const Multigraph k4{5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  EXPECT_EQ(chromatic(k4, 4), 24 * 4);
}

TEST(Chromatic, MatchesTutteSpecialization) {
  // Chr(G, Q) = (-1)^(|V|-1) Q T(1-Q, 0) for connected G.
  for (const auto& p : small_pairs(5)) {
    const auto g = gamma_graph(p).underlying();
    const auto t = tutte(g);
    for (int q = 2; q <= 5; ++q) {
      BigInt via = BigInt(q) * t.evaluate(BigInt(1 - q), BigInt(0));
      if ((g.vertex_count - 1) % 2) via = -via;
      EXPECT_EQ(chromatic(g, q), via) << p.str();
    }
  }
}

TEST(Tutte, SmallGraphs) {
  EXPECT_EQ(tutte(triangle()), TuttePoly::x().pow(2) + TuttePoly::x() + TuttePoly::y());
  EXPECT_EQ(tutte({1, {{0, 0}}}), TuttePoly::y());
  EXPECT_EQ(tutte({2, {{0, 1}}}), TuttePoly::x());
  EXPECT_EQ(tutte({2, {{0, 1}, {0, 1}}}), TuttePoly::x() + TuttePoly::y());
  EXPECT_EQ(tutte({3, {}}), TuttePoly::one());
}

TEST(Tutte, MatchesSubsetExpansion) {
  for (const auto& p : small_pairs(5)) {
    const auto g = gamma_graph(p).underlying();
    EXPECT_EQ(tutte(g), tutte_rank_nullity(g)) << p.str();
  }
  const Multigraph messy{4, {{0, 1}, {0, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 0}, {1, 3}, {0, 2}}};
  EXPECT_EQ(tutte(messy), tutte_rank_nullity(messy));
}

TEST(Tutte, SpanningTreeCount) {
  // T(1,1) counts spanning trees; K4 has 16.
  const Multigraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  EXPECT_EQ(tutte(k4).evaluate(BigInt(1), BigInt(1)), 16);
}

TEST(Bracket, KnownLinks) {
  const auto d = LaurentPoly::loop_value();
  EXPECT_EQ(bracket(link_of(identity_pair())), LaurentPoly::constant(1));
  EXPECT_EQ(bracket(link_of(w("x0^-1"))), LaurentPoly::constant(1));
  EXPECT_EQ(bracket(link_of(w("x1^-1"))), d);
  const TreePair id3(Tree::parse("((l l) l)"), Tree::parse("((l l) l)"));
  EXPECT_EQ(bracket(link_of_unreduced(id3)), d * d);
  EXPECT_EQ(bracket(link_of(w("x0^-1 x1 x0^-1"))), -LaurentPoly::monomial(1, 4) - LaurentPoly::monomial(1, -4));
  EXPECT_EQ(bracket(link_of(w("x1 x0^-1 x1 x0^-1"))),
            LaurentPoly::constant(1) - LaurentPoly::monomial(1, 4) + LaurentPoly::monomial(1, -8));
}

TEST(Bracket, MatchesSkeinRecursion) {
  for (const auto& p : small_pairs(5)) {
    const auto link = link_of(p);
    EXPECT_EQ(bracket(link), bracket_skein(link)) << p.str();
  }
}

TEST(Bracket, Errors) {
  EXPECT_THROW(bracket(LinkDiagram({}, 0, 0)), DomainError);
  std::mt19937_64 rng(1);
  auto g = TreePair(random_tree(9, rng), random_tree(9, rng));
  EXPECT_THROW(bracket(link_of_unreduced(g), 10), CapExceeded);
}

TEST(Colourings, KnownCounts) {
  EXPECT_EQ(col_count(link_of(w("x1 x0^-1 x1 x0^-1")), 3), 9);
  EXPECT_EQ(col_count(link_of(w("x1 x0^-1 x1 x0^-1")), 5), 5);
  EXPECT_EQ(col_count(link_of(identity_pair()), 3), 3);
  EXPECT_EQ(col_count(link_of(w("x1^-1")), 5), 25);
  // Hopf link: Q * gcd(2, Q) colourings
  EXPECT_EQ(col_count(link_of(w("x0^-1 x1 x0^-1")), 3), 3);
  EXPECT_EQ(col_count(link_of(w("x0^-1 x1 x0^-1")), 1), 1);
  EXPECT_THROW(col_count(link_of(identity_pair()), 4), DomainError);
}

TEST(Colourings, CompositeModulus) {
  // Q = 9 and 15 exercise non-prime moduli against the brute-force search.
  for (const auto& p : small_pairs(5)) {
    const auto link = link_of(p);
    for (int q : {9, 15}) EXPECT_EQ(col_count(link, q), colouring_partition(link, q)) << p.str();
  }
}

TEST(Normalized, Functions) {
  EXPECT_EQ(chr_fn(identity_pair(), 4), 4);
  EXPECT_EQ(colq_fn(identity_pair(), 3), 1);
  EXPECT_EQ(tutte_fn(identity_pair(), Rational(2), Rational(3)), 1);
  EXPECT_NEAR(std::abs(bracket_fn(identity_pair(), std::polar(1.0, 0.3)) -
                       1.0 / LaurentPoly::loop_value().evaluate(std::polar(1.0, 0.3))),
              0.0, 1e-12);
  EXPECT_THROW(chr_fn(identity_pair(), 1), DomainError);
  EXPECT_THROW(tutte_fn(identity_pair(), Rational(1), Rational(-1)), DomainError);
  EXPECT_THROW(bracket_fn(identity_pair(), std::polar(1.0, M_PI / 4)), DomainError);
  EXPECT_THROW(colq_fn(identity_pair(), 2), DomainError);
}

TEST(Normalized, PaddingInvariance) {
  std::mt19937_64 rng(8);
  const std::complex<double> a = std::polar(1.1, 0.4);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_element(6, rng);
    const auto padded = pad_with_caret(pad_with_caret(g, 0), g.leaf_count());
    EXPECT_EQ(chr_fn(g, 3), chr_fn(padded, 3));
    EXPECT_EQ(colq_fn(g, 5), colq_fn(padded, 5));
    EXPECT_EQ(tutte_fn(g, Rational(3), Rational(1, 2)), tutte_fn(padded, Rational(3), Rational(1, 2)));
    EXPECT_NEAR(std::abs(bracket_fn(g, a) - bracket_fn(padded, a)), 0.0, 1e-12);
  }
}
