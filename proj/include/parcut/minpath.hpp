#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parcut/decomp.hpp"
#include "parcut/prefix.hpp"
#include "parcut/rng.hpp"
#include "parcut/tree.hpp"

namespace parcut {

// AddPath(v, x) adds x to every vertex on the path from v to the root;
// MinPath(v) returns the smallest weight on that path.
struct TreeOp {
  std::int64_t time = 0;
  OpKind kind = OpKind::kMin;
  VertexId vertex = 0;
  Weight x = 0;
  Weight offset = 0;
  std::int64_t tag = 0;
};

struct RouteStep {
  std::int32_t path;
  std::int32_t position;  // prefix [0, position] of the path lies on the walk
};

struct TreeBatchStats {
  std::int64_t prefix_ops = 0;
  std::int64_t node_work = 0;
  std::size_t max_expansion = 0;
  bool node_work_within_bound = true;  // per prefix batch: work <= k(ceil(log2 n)+1) + 2n
};

struct TreeBatchResult {
  std::vector<Weight> results;  // one per MinPath, in batch order
  TreeBatchStats stats;
};

class MinPathStructure {
 public:
  MinPathStructure(const RootedTree& t, std::span<const Weight> weights, PathDecomposition decomposition);
  MinPathStructure(const RootedTree& t, std::span<const Weight> weights, Rng& rng);

  [[nodiscard]] VertexId size() const { return static_cast<VertexId>(decomposition_.path_of.size()); }
  [[nodiscard]] const PathDecomposition& decomposition() const { return decomposition_; }
  [[nodiscard]] std::span<const RouteStep> route(VertexId v) const {
    return {routes_.data() + route_offsets_[v], routes_.data() + route_offsets_[v + 1]};
  }

  // Current weight of every vertex.
  [[nodiscard]] std::vector<Weight> weights() const;

  // Ops must be sorted by time with updates first at equal times.
  TreeBatchResult execute_tree_batch(std::span<const TreeOp> ops);

 private:
  PathDecomposition decomposition_;
  std::vector<PrefixStructure> prefix_;
  std::vector<std::size_t> route_offsets_{0};
  std::vector<RouteStep> routes_;
};

}  // namespace parcut
