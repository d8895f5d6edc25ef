#pragma once

#include <utility>
#include <vector>

#include "parcut/sparse_table.hpp"
#include "parcut/tree.hpp"

namespace parcut {

// Lowest common ancestors via an Euler tour and a (depth, vertex) sparse table.
class LcaIndex {
 public:
  explicit LcaIndex(const RootedTree& tree);

  [[nodiscard]] VertexId lca(VertexId a, VertexId b) const;

 private:
  struct MinByDepth {
    std::pair<int, VertexId> operator()(const std::pair<int, VertexId>& a,
                                        const std::pair<int, VertexId>& b) const {
      return b < a ? b : a;
    }
  };

  std::vector<std::size_t> tour_index_;
  SparseTable<std::pair<int, VertexId>, MinByDepth> table_;
};

}  // namespace parcut
