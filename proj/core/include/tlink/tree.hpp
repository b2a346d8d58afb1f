#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tlink {

/// A rooted planar binary tree.
///
/// Stored as its preorder code: 1 for a caret (internal node), 0 for a leaf.
/// The code determines the tree, so equality and ordering are those of the
/// code. Leaves are numbered 0..leaf_count()-1 from left to right.
class Tree {
 public:
  /// The single leaf.
  Tree() : code_{0} {}

  static Tree leaf() { return Tree(); }
  static Tree caret(const Tree& left, const Tree& right);

  /// Parses the text form: `l` for a leaf, `(L R)` for a caret.
  static Tree parse(std::string_view text);

  /// Builds a tree from a preorder code; throws DomainError when malformed.
  static Tree from_code(std::vector<std::uint8_t> code);

  bool is_leaf() const { return code_.size() == 1; }
  Tree left() const;
  Tree right() const;

  int leaf_count() const { return static_cast<int>(code_.size() / 2) + 1; }
  int caret_count() const { return static_cast<int>(code_.size() / 2); }

  /// Leaf indices i such that leaves i and i+1 hang from a common caret.
  std::vector<int> exposed_carets() const;

  /// Replaces leaf i by a caret.
  Tree with_caret_at(int leaf) const;
  /// Collapses the exposed caret whose left leaf is i back to a leaf.
  Tree without_caret_at(int leaf) const;

  /// Replaces leaf i by subtrees[i]; needs exactly leaf_count() subtrees.
  Tree graft(std::span<const Tree> subtrees) const;

  /// For a refinement R of this tree (this tree is a rooted subtree of R),
  /// returns the subtree of R hanging below each of this tree's leaves.
  std::vector<Tree> leaf_subtrees(const Tree& refinement) const;

  bool refines(const Tree& coarser) const;

  std::string str() const;
  const std::vector<std::uint8_t>& code() const { return code_; }

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<std::uint8_t> code) : code_(std::move(code)) {}

  std::vector<std::uint8_t> code_;
};

/// The least common refinement: the smallest tree refining both arguments.
Tree common_refinement(const Tree& a, const Tree& b);

/// Every tree with the given number of leaves, in increasing code order.
std::vector<Tree> all_trees(int leaves);

/// Uniformly random tree with the given number of leaves (Remy's growth).
Tree random_tree(int leaves, std::mt19937_64& rng);

}  // namespace tlink

template <>
struct std::hash<tlink::Tree> {
  std::size_t operator()(const tlink::Tree& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : t.code()) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};
