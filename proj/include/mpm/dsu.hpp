#pragma once

#include <utility>
#include <vector>

namespace mpm {

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(int n) : parent_(n, -1) {}

  int find(int x) {
    while (parent_[x] >= 0) {
      if (parent_[parent_[x]] >= 0) parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Merges the sets holding a and b; no-op if already joined.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (parent_[a] > parent_[b]) std::swap(a, b);  // a keeps the larger set
    parent_[a] += parent_[b];
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;  // -size at roots, parent index elsewhere
};

}  // namespace mpm
