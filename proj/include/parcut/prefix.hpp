#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

enum class OpKind : std::uint8_t { kAdd = 0, kMin = 1 };

// AddPrefix(index, x) adds x to positions [0, index]; MinPrefix(index)
// returns the smallest weight among positions [0, index]. Ops sharing a
// time are ordered updates first.
struct PrefixOp {
  std::int64_t time = 0;
  OpKind kind = OpKind::kMin;
  std::int32_t index = 0;
  Weight x = 0;
  Weight offset = 0;  // carried through for the caller, never read here
  std::int64_t tag = 0;
};

// True iff ops are sorted by time with updates before queries at equal times.
bool is_batch_ordered(std::span<const PrefixOp> ops);

// Arrays a node holds for one batch; entry i belongs to the i-th update
// (by batch position) whose prefix ends below the node.
struct NodeBatchState {
  std::vector<std::int64_t> relevant;  // H(b): batch positions of relevant updates
  std::vector<Weight> increment;       // X(b)
  std::vector<Weight> phi;             // change of the subtree minimum per update
  std::vector<Weight> delta;           // right-minus-left minimum after each update (inner nodes)
};

struct PrefixBatchStats {
  std::int64_t updates = 0;
  std::int64_t queries = 0;
  // |H(b)| summed over all nodes plus one per inner node.
  std::int64_t node_work = 0;
  // Depths processed, in order, by the update sweep and the query sweep.
  std::vector<int> update_levels;
  std::vector<int> query_levels;
};

struct PrefixBatchResult {
  std::vector<Weight> results;  // one per MinPrefix, in batch order
  std::vector<Weight> final_weights;
  PrefixBatchStats stats;
};

// Minimum-prefix structure over a list: a complete binary tree over the
// positions (padded to a power of two) where each inner node stores the
// difference between the minima of its right and left subtrees.
class PrefixStructure {
 public:
  explicit PrefixStructure(std::vector<Weight> weights);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t padded_size() const { return padded_; }
  [[nodiscard]] int height() const { return height_; }

  // Heap-indexed inner nodes: 1 is the root, children of b are 2b and 2b+1.
  [[nodiscard]] Weight delta(std::size_t node) const { return delta_[node]; }
  [[nodiscard]] Weight root_min() const { return root_min_; }
  [[nodiscard]] std::span<const Weight> weights() const { return {leaf_.data(), n_}; }

  // Executes the batch as if the ops ran one by one, and leaves the
  // structure in the post-batch state. If trace is given it receives the
  // per-node arrays, indexed like delta().
  PrefixBatchResult execute_batch(std::span<const PrefixOp> ops, std::vector<NodeBatchState>* trace = nullptr);

 private:
  std::size_t n_ = 0;
  std::size_t padded_ = 1;
  int height_ = 0;
  std::vector<Weight> leaf_;   // padded leaf weights
  std::vector<Weight> delta_;  // [1, padded_)
  Weight root_min_ = 0;
};

}  // namespace parcut
