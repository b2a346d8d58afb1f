#include <gtest/gtest.h>

#include <random>

#include "tlink/error.hpp"
#include "tlink/thompson.hpp"

using namespace tlink;

namespace {
TreePair w(const char* text) { return word_to_pair(parse_word(text)); }
}  // namespace

TEST(Words, Parse) {
  EXPECT_EQ(parse_word("x1 x0^-1"), (Word{{1, 1}, {0, -1}}));
  EXPECT_EQ(parse_word("x_3^2x0"), (Word{{3, 2}, {0, 1}}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_EQ(format_word(parse_word("x1 x0^-1 x2^3")), "x1 x0^-1 x2^3");
}

TEST(Words, ParseErrorsCarryOffset) {
  try {
    parse_word("x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_word("x1 y2"), ParseError);
  EXPECT_THROW(parse_word("x1^0"), ParseError);
  EXPECT_THROW(parse_word("x1^"), ParseError);
}

TEST(Pairs, Generators) {
  EXPECT_EQ(generator_pair(0).str(), "((l l) l) | (l (l l))");
  EXPECT_EQ(generator_pair(1).str(), "(l ((l l) l)) | (l (l (l l)))");
  EXPECT_EQ(generator_pair(2).leaf_count(), 5);
  EXPECT_THROW(generator_pair(-1), DomainError);
}

TEST(Pairs, MismatchedLeafCounts) {
  EXPECT_THROW(TreePair(Tree::parse("(l l)"), Tree::leaf()), DomainError);
}

TEST(Pairs, InverseAndIdentity) {
  for (const char* text : {"x0", "x1 x0^-1", "x2^2 x0^-3 x1"}) {
    const auto g = w(text);
    EXPECT_EQ(multiply(g, invert(g)), identity_pair());
    EXPECT_EQ(multiply(identity_pair(), g), g);
  }
}

TEST(Pairs, PresentationRelations) {
  EXPECT_EQ(w("x2 x1"), w("x1 x3"));
  EXPECT_EQ(w("x3 x1"), w("x1 x4"));
  EXPECT_EQ(w("x3 x2"), w("x2 x4"));
  EXPECT_NE(w("x0 x1"), w("x1 x0"));
}

TEST(Pairs, ReduceUndoesPadding) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_element(6, rng);
    EXPECT_TRUE(is_reduced(g));
    auto padded = pad_with_caret(g, static_cast<int>(rng() % g.leaf_count()));
    padded = pad_with_caret(padded, 0);
    EXPECT_FALSE(is_reduced(padded));
    EXPECT_EQ(reduce(padded), g);
  }
}

TEST(Pairs, OmegaSquared) {
  const auto g = w("x1 x0^-1 x1 x0^-1");
  EXPECT_EQ(g.leaf_count(), 5);
  EXPECT_EQ(w("x1 x0^-1").leaf_count(), 4);
}

TEST(Pairs, CommonForm) {
  const std::vector<TreePair> elems{w("x0"), w("x0^-1")};
  const auto form = common_form(elems);
  EXPECT_EQ(form.bottom.str(), "((l l) (l l))");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    EXPECT_EQ(reduce(TreePair(form.tops[i], form.bottom)), elems[i]);
    for (std::size_t j = 0; j < elems.size(); ++j)
      EXPECT_EQ(reduce(TreePair(form.tops[i], form.tops[j])), multiply(elems[i], invert(elems[j])));
  }
}

TEST(Dyadics, Canonical) {
  EXPECT_EQ(Dyadic(2, 2), Dyadic(1, 1));
  EXPECT_EQ(Dyadic(4, 3).str(), "1/2");
  EXPECT_LT(Dyadic(1, 2), Dyadic(1, 1));
  EXPECT_THROW(Dyadic(5, 2), DomainError);
}

TEST(Action, GeneratorX0) {
  const auto x0 = generator_pair(0);
  EXPECT_EQ(apply(x0, Dyadic(1, 2)), Dyadic(1, 1));
  EXPECT_EQ(apply(x0, Dyadic(1, 1)), Dyadic(3, 2));
  EXPECT_EQ(apply(x0, Dyadic(0, 0)), Dyadic(0, 0));
  EXPECT_EQ(apply(x0, Dyadic(1, 0)), Dyadic(1, 0));
  EXPECT_EQ(apply(x0, Dyadic(1, 3)), Dyadic(1, 2));
}

TEST(Action, Homomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(6, rng);
    const auto b = random_element(6, rng);
    const Dyadic t(rng() % 1025, 10);
    EXPECT_EQ(apply(multiply(a, b), t), apply(b, apply(a, t)));
  }
}

TEST(Enumeration, CountsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::size_t brute = 0;
    for (const auto& a : all_trees(n))
      for (const auto& b : all_trees(n)) brute += is_reduced(TreePair(a, b));
    const auto pairs = enumerate_reduced_pairs(n);
    EXPECT_EQ(pairs.size(), brute) << n;
    EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  }
  EXPECT_EQ(enumerate_reduced_pairs(4).size(), 14u);
  EXPECT_THROW(enumerate_reduced_pairs(7), CapExceeded);
}
