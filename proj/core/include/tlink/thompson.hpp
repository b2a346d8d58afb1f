#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlink/tree.hpp"

namespace tlink {

/// One factor x_index^exponent of a word in the generators x_0, x_1, x_2, ...
struct Generator {
  int index = 0;
  int exponent = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word in the infinite generating set; the empty word is the identity.
using Word = std::vector<Generator>;

/// Tokenizes a word such as "x1 x0^-1 x_3^2". No simplification is done.
/// Throws ParseError (with the byte offset) on malformed input.
Word parse_word(std::string_view text);

std::string format_word(const Word& word);

/// A matched pair of trees with equal leaf counts representing an element of
/// F. `plus` carries the domain subdivision and `minus` the range
/// subdivision: the i-th dyadic interval of `plus` is mapped affinely onto
/// the i-th interval of `minus`.
class TreePair {
 public:
  /// The identity on one leaf.
  TreePair() = default;
  TreePair(Tree plus, Tree minus);

  const Tree& plus() const { return plus_; }
  const Tree& minus() const { return minus_; }
  int leaf_count() const { return plus_.leaf_count(); }

  std::string str() const;

  friend bool operator==(const TreePair&, const TreePair&) = default;
  friend auto operator<=>(const TreePair&, const TreePair&) = default;

 private:
  Tree plus_;
  Tree minus_;
};

TreePair identity_pair();

/// Reduced pair of the generator x_k; x_k = x_0^{1-k} x_1 x_0^{k-1} for k >= 2.
TreePair generator_pair(int k);

/// Left-to-right product of the generator pairs; the result is reduced.
TreePair word_to_pair(const Word& word);

/// Product in F, "a first, then b": as maps, apply(multiply(a, b), t) equals
/// apply(b, apply(a, t)). Refines a.minus and b.plus to a common tree, grafts
/// the same subtrees onto a.plus and b.minus, and reduces.
TreePair multiply(const TreePair& a, const TreePair& b);

TreePair invert(const TreePair& p);

/// Cancels opposing carets (the same exposed caret in both trees) until none
/// remain. The reduced pair of an element is unique.
TreePair reduce(const TreePair& p);

bool is_reduced(const TreePair& p);

/// Adds an opposing pair of carets at leaf i. Same element, one more leaf.
TreePair pad_with_caret(const TreePair& p, int leaf);

/// Representatives g_i = g(tops[i], bottom) sharing a single bottom tree, the
/// least common refinement of every minus tree. Then g_i g_j^{-1} is
/// g(tops[i], tops[j]).
struct CommonForm {
  std::vector<Tree> tops;
  Tree bottom;
};

CommonForm common_form(std::span<const TreePair> elements);

/// The dyadic rational numerator / 2^exponent in [0, 1], kept in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::uint64_t numerator, int exponent);

  std::uint64_t numerator() const { return numerator_; }
  int exponent() const { return exponent_; }
  double value() const;
  std::string str() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::uint64_t numerator_ = 0;
  int exponent_ = 0;
};

/// Evaluates the piecewise-linear homeomorphism of [0, 1] given by p.
Dyadic apply(const TreePair& p, const Dyadic& t);

/// Every reduced pair with exactly `leaves` leaves, in increasing order.
/// Throws CapExceeded when leaves > cap.
std::vector<TreePair> enumerate_reduced_pairs(int leaves, int cap = 6);

/// Reduction of a pair of uniformly random trees whose leaf count is drawn
/// uniformly from [1, max_leaves].
TreePair random_element(int max_leaves, std::mt19937_64& rng);

}  // namespace tlink
