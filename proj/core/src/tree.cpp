#include "tlink/tree.hpp"

#include <algorithm>
#include <cctype>

#include "tlink/error.hpp"

namespace tlink {

namespace {

using Code = std::vector<std::uint8_t>;

// One past the end of the subtree whose root sits at `pos`.
std::size_t subtree_end(const Code& code, std::size_t pos) {
  int open = 1;
  while (open > 0) {
    open += code[pos] == 1 ? 1 : -1;
    ++pos;
  }
  return pos;
}

void refine_into(const Code& a, std::size_t& i, const Code& b, std::size_t& j,
                 Code& out) {
  if (a[i] == 0) {
    auto end = subtree_end(b, j);
    out.insert(out.end(), b.begin() + j, b.begin() + end);
    ++i;
    j = end;
    return;
  }
  if (b[j] == 0) {
    auto end = subtree_end(a, i);
    out.insert(out.end(), a.begin() + i, a.begin() + end);
    i = end;
    ++j;
    return;
  }
  out.push_back(1);
  ++i;
  ++j;
  refine_into(a, i, b, j, out);
  refine_into(a, i, b, j, out);
}

bool refines_at(const Code& fine, std::size_t& i, const Code& coarse,
                std::size_t& j) {
  if (coarse[j] == 0) {
    i = subtree_end(fine, i);
    ++j;
    return true;
  }
  if (fine[i] == 0) return false;
  ++i;
  ++j;
  return refines_at(fine, i, coarse, j) && refines_at(fine, i, coarse, j);
}

void append_text(const Code& code, std::size_t& pos, std::string& out) {
  if (code[pos++] == 0) {
    out.push_back('l');
    return;
  }
  out.push_back('(');
  append_text(code, pos, out);
  out.push_back(' ');
  append_text(code, pos, out);
  out.push_back(')');
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Code parse() {
    Code code;
    skip_ws();
    node(code);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters in tree", pos_);
    return code;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void node(Code& code) {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    if (text_[pos_] == 'l') {
      ++pos_;
      code.push_back(0);
      return;
    }
    if (text_[pos_] != '(') throw ParseError("expected 'l' or '('", pos_);
    ++pos_;
    code.push_back(1);
    skip_ws();
    node(code);
    skip_ws();
    node(code);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree Tree::caret(const Tree& left, const Tree& right) {
  Code code;
  code.reserve(left.code_.size() + right.code_.size() + 1);
  code.push_back(1);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return Tree(std::move(code));
}

Tree Tree::parse(std::string_view text) { return Tree(TreeParser(text).parse()); }

Tree Tree::from_code(std::vector<std::uint8_t> code) {
  int open = 1;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] > 1 || open <= 0) throw DomainError("malformed tree code");
    open += code[k] == 1 ? 1 : -1;
  }
  if (open != 0) throw DomainError("malformed tree code");
  return Tree(std::move(code));
}

Tree Tree::left() const {
  if (is_leaf()) throw DomainError("a leaf has no children");
  auto end = subtree_end(code_, 1);
  return Tree(Code(code_.begin() + 1, code_.begin() + end));
}

Tree Tree::right() const {
  if (is_leaf()) throw DomainError("a leaf has no children");
  auto begin = subtree_end(code_, 1);
  return Tree(Code(code_.begin() + begin, code_.end()));
}

std::vector<int> Tree::exposed_carets() const {
  std::vector<int> result;
  int leaf = 0;
  for (std::size_t k = 0; k < code_.size(); ++k) {
    if (code_[k] == 0) {
      ++leaf;
    } else if (k + 2 < code_.size() && code_[k + 1] == 0 && code_[k + 2] == 0) {
      result.push_back(leaf);
    }
  }
  return result;
}

Tree Tree::with_caret_at(int leaf) const {
  if (leaf < 0 || leaf >= leaf_count()) throw DomainError("leaf index out of range");
  Code code;
  code.reserve(code_.size() + 2);
  int seen = 0;
  for (auto b : code_) {
    if (b == 0 && seen++ == leaf) {
      code.insert(code.end(), {1, 0, 0});
    } else {
      code.push_back(b);
    }
  }
  return Tree(std::move(code));
}

Tree Tree::without_caret_at(int leaf) const {
  int seen = 0;
  for (std::size_t k = 0; k < code_.size(); ++k) {
    if (code_[k] == 0) {
      ++seen;
      continue;
    }
    if (seen == leaf && k + 2 < code_.size() && code_[k + 1] == 0 && code_[k + 2] == 0) {
      Code code(code_.begin(), code_.begin() + k);
      code.push_back(0);
      code.insert(code.end(), code_.begin() + k + 3, code_.end());
      return Tree(std::move(code));
    }
  }
  throw DomainError("no exposed caret at leaf " + std::to_string(leaf));
}

Tree Tree::graft(std::span<const Tree> subtrees) const {
  if (static_cast<int>(subtrees.size()) != leaf_count())
    throw DomainError("graft needs one subtree per leaf");
  Code code;
  std::size_t next = 0;
  for (auto b : code_) {
    if (b == 1) {
      code.push_back(1);
    } else {
      const auto& sub = subtrees[next++].code_;
      code.insert(code.end(), sub.begin(), sub.end());
    }
  }
  return Tree(std::move(code));
}

std::vector<Tree> Tree::leaf_subtrees(const Tree& refinement) const {
  if (!refinement.refines(*this)) throw DomainError("tree is not a refinement");
  std::vector<Tree> result;
  result.reserve(leaf_count());
  const Code& fine = refinement.code_;
  std::size_t i = 0;
  for (auto b : code_) {
    if (b == 1) {
      ++i;
    } else {
      auto end = subtree_end(fine, i);
      result.push_back(Tree(Code(fine.begin() + i, fine.begin() + end)));
      i = end;
    }
  }
  return result;
}

bool Tree::refines(const Tree& coarser) const {
  std::size_t i = 0;
  std::size_t j = 0;
  return refines_at(code_, i, coarser.code_, j);
}

std::string Tree::str() const {
  std::string out;
  std::size_t pos = 0;
  append_text(code_, pos, out);
  return out;
}

Tree common_refinement(const Tree& a, const Tree& b) {
  Code out;
  std::size_t i = 0;
  std::size_t j = 0;
  refine_into(a.code(), i, b.code(), j, out);
  return Tree::from_code(std::move(out));
}

std::vector<Tree> all_trees(int leaves) {
  if (leaves < 1) throw DomainError("a tree has at least one leaf");
  std::vector<std::vector<Tree>> by_size(leaves + 1);
  by_size[1] = {Tree::leaf()};
  for (int n = 2; n <= leaves; ++n) {
    for (int k = 1; k < n; ++k)
      for (const auto& l : by_size[k])
        for (const auto& r : by_size[n - k]) by_size[n].push_back(Tree::caret(l, r));
    std::sort(by_size[n].begin(), by_size[n].end());
  }
  return by_size[leaves];
}

Tree random_tree(int leaves, std::mt19937_64& rng) {
  if (leaves < 1) throw DomainError("a tree has at least one leaf");
  // Remy: node k has children (left[k], right[k]) or is a leaf (-1).
  std::vector<int> left{-1};
  std::vector<int> right{-1};
  std::vector<int> parent{-1};
  int root = 0;
  for (int step = 1; step < leaves; ++step) {
    int nodes = static_cast<int>(left.size());
    int target = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    bool new_on_left = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    int fresh = nodes;
    int joint = nodes + 1;
    left.push_back(-1);
    right.push_back(-1);
    parent.push_back(joint);
    left.push_back(new_on_left ? fresh : target);
    right.push_back(new_on_left ? target : fresh);
    parent.push_back(parent[target]);
    if (parent[target] < 0) {
      root = joint;
    } else if (left[parent[target]] == target) {
      left[parent[target]] = joint;
    } else {
      right[parent[target]] = joint;
    }
    parent[target] = joint;
  }
  Code code;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (left[k] < 0) {
      code.push_back(0);
    } else {
      code.push_back(1);
      stack.push_back(right[k]);
      stack.push_back(left[k]);
    }
  }
  return Tree::from_code(std::move(code));
}

}  // namespace tlink
