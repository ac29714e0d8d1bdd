#pragma once

#include <numeric>
#include <vector>

namespace sbw {

// Plain disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      int next = parent_[x];
      parent_[x] = r;
      x = next;
    }
    return r;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  bool same(int a, int b) { return find(a) == find(b); }

  int count() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace sbw
