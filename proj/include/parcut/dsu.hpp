#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

// Union-find whose representative is always the smallest member.
class DisjointSets {
 public:
  explicit DisjointSets(VertexId n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  VertexId find(VertexId x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace parcut
