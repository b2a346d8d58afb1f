#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace tlink::detail {

// Path-halving union-find; used for component and loop counting.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    --sets_;
    return true;
  }

  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_;
};

// Union by size without path compression, so every union can be undone in
// LIFO order. Drives the depth-first bracket state sum.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) const {
    while (parent_[i] != i) i = parent_[i];
    return i;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.emplace_back(-1, -1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    history_.emplace_back(a, b);
  }

  void undo() {
    auto [a, b] = history_.back();
    history_.pop_back();
    if (a < 0) return;
    parent_[b] = b;
    size_[a] -= size_[b];
    ++sets_;
  }

  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> history_;
  int sets_;
};

}  // namespace tlink::detail
