#include "parcut/prefix.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

#include "parcut/parallel.hpp"
#include "parcut/scan.hpp"

namespace parcut {

bool is_batch_ordered(std::span<const PrefixOp> ops) {
  for (std::size_t i = 1; i < ops.size(); ++i) {
    const auto& a = ops[i - 1];
    const auto& b = ops[i];
    if (a.time > b.time) return false;
    if (a.time == b.time && a.kind == OpKind::kMin && b.kind == OpKind::kAdd) return false;
  }
  return true;
}

PrefixStructure::PrefixStructure(std::vector<Weight> weights) : n_(weights.size()) {
  if (weights.empty()) throw std::invalid_argument("prefix structure needs at least one position");
  padded_ = std::bit_ceil(n_);
  height_ = std::countr_zero(padded_);
  leaf_ = std::move(weights);
  leaf_.resize(padded_, kPadding);

  std::vector<Weight> mins(2 * padded_);
  std::copy(leaf_.begin(), leaf_.end(), mins.begin() + static_cast<std::ptrdiff_t>(padded_));
  delta_.assign(padded_, 0);
  for (std::size_t b = padded_ - 1; b >= 1; --b) {
    mins[b] = std::min(mins[2 * b], mins[2 * b + 1]);
    delta_[b] = mins[2 * b + 1] - mins[2 * b];
  }
  root_min_ = mins[1];
}

namespace {

struct QueryItem {
  std::int64_t position;  // batch position
  Weight d;               // restricted minimum minus subtree minimum
  bool from_right;        // set while merging at the current node
};

// Groups the batch positions of one op kind by leaf index; within a leaf
// they stay in batch order. Returns (leaf index, [begin, end)) slices.
struct LeafSlices {
  std::vector<std::int64_t> positions;
  std::vector<std::size_t> starts;  // slice boundaries into positions, plus end
};

LeafSlices group_by_leaf(std::span<const PrefixOp> ops, OpKind kind) {
  LeafSlices g;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].kind == kind) g.positions.push_back(static_cast<std::int64_t>(i));
  }
  std::stable_sort(g.positions.begin(), g.positions.end(),
                   [&](std::int64_t a, std::int64_t b) { return ops[a].index < ops[b].index; });
  for (std::size_t i = 0; i < g.positions.size(); ++i) {
    if (i == 0 || ops[g.positions[i]].index != ops[g.positions[i - 1]].index) g.starts.push_back(i);
  }
  g.starts.push_back(g.positions.size());
  return g;
}

// φ of node b for its i-th relevant update, from the children's φ values
// and the difference before and after the update.
Weight combine_phi(Weight phi_left, Weight phi_right, Weight before, Weight after) {
  if (before > 0 && after > 0) return phi_left;
  if (before <= 0 && after > 0) return phi_left - before;
  if (before <= 0 && after <= 0) return phi_right;
  return phi_right + before;
}

void merge_inner(std::vector<NodeBatchState>& state, std::size_t b, Weight delta_before) {
  const NodeBatchState& left = state[2 * b];
  const NodeBatchState& right = state[2 * b + 1];
  NodeBatchState& node = state[b];
  const std::size_t total = left.relevant.size() + right.relevant.size();
  if (total == 0) return;

  node.relevant.resize(total);
  node.increment.resize(total);
  std::vector<Weight> phi_left(total);
  std::vector<Weight> phi_right(total);
  std::size_t a = 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const bool take_left =
        c == right.relevant.size() || (a < left.relevant.size() && left.relevant[a] < right.relevant[c]);
    if (take_left) {
      // The update ends in the left subtree and does not reach the right one.
      node.relevant[i] = left.relevant[a];
      node.increment[i] = left.increment[a];
      phi_left[i] = left.phi[a];
      phi_right[i] = 0;
      ++a;
    } else {
      // The update covers the whole left subtree.
      node.relevant[i] = right.relevant[c];
      node.increment[i] = right.increment[c];
      phi_left[i] = right.increment[c];
      phi_right[i] = right.phi[c];
      ++c;
    }
  }

  const auto sum_left = all_prefix_sums(phi_left);
  const auto sum_right = all_prefix_sums(phi_right);
  node.delta.resize(total);
  node.phi.resize(total);
  for (std::size_t i = 0; i < total; ++i) node.delta[i] = delta_before + sum_right[i] - sum_left[i];
  for (std::size_t i = 0; i < total; ++i) {
    const Weight before = i == 0 ? delta_before : node.delta[i - 1];
    node.phi[i] = combine_phi(phi_left[i], phi_right[i], before, node.delta[i]);
  }
}

// Pairs each query with the last carrier at or before it (by batch position).
std::vector<Weight> last_value_before(std::span<const std::int64_t> carrier_pos, std::span<const Weight> carrier_val,
                                      std::span<const QueryItem> queries, Weight fallback) {
  std::vector<BroadcastItem<Weight>> items;
  items.reserve(carrier_pos.size() + queries.size());
  std::size_t a = 0;
  for (const QueryItem& q : queries) {
    while (a < carrier_pos.size() && carrier_pos[a] < q.position) items.push_back({carrier_val[a++]});
    items.push_back({});
  }
  return segmented_broadcast<Weight>(items, fallback);
}

}  // namespace

PrefixBatchResult PrefixStructure::execute_batch(std::span<const PrefixOp> ops, std::vector<NodeBatchState>* trace) {
  if (!is_batch_ordered(ops)) throw std::invalid_argument("batch is not ordered by time (updates first)");
  for (const PrefixOp& op : ops) {
    if (op.index < 0 || static_cast<std::size_t>(op.index) >= n_) throw std::out_of_range("prefix index out of range");
  }

  PrefixBatchResult out;
  std::vector<std::size_t> result_slot(ops.size(), 0);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].kind == OpKind::kAdd) {
      ++out.stats.updates;
    } else {
      result_slot[i] = static_cast<std::size_t>(out.stats.queries++);
    }
  }
  out.results.assign(static_cast<std::size_t>(out.stats.queries), 0);
  if (ops.empty()) {
    out.final_weights.assign(leaf_.begin(), leaf_.begin() + static_cast<std::ptrdiff_t>(n_));
    return out;
  }

  const std::size_t P = padded_;
  std::vector<NodeBatchState> state(2 * P);

  // Leaves: updates grouped by position, φ equals the increment.
  const LeafSlices updates = group_by_leaf(ops, OpKind::kAdd);
  par::for_each_index(updates.starts.size() - 1, [&](std::size_t s) {
    const auto begin = updates.starts[s];
    const auto end = updates.starts[s + 1];
    NodeBatchState& leaf = state[P + static_cast<std::size_t>(ops[updates.positions[begin]].index)];
    for (auto i = begin; i < end; ++i) {
      const auto pos = updates.positions[i];
      leaf.relevant.push_back(pos);
      leaf.increment.push_back(ops[pos].x);
    }
    leaf.phi = leaf.increment;
  }, 64);
  out.stats.update_levels.push_back(height_);

  // Inner nodes, one level at a time, deepest first.
  for (int depth = height_ - 1; depth >= 0; --depth) {
    const std::size_t first = std::size_t{1} << depth;
    par::for_each_index(first, [&](std::size_t j) { merge_inner(state, first + j, delta_[first + j]); }, 16);
    out.stats.update_levels.push_back(depth);
  }

  // Overall minimum after each update relevant at the root.
  const NodeBatchState& root = state[1];
  std::vector<Weight> root_mins = all_prefix_sums(root.phi);
  for (Weight& m : root_mins) m += root_min_;

  // Queries climb from their leaves carrying d, reading Δ as of their time.
  std::vector<std::vector<QueryItem>> pending(2 * P);
  const LeafSlices queries = group_by_leaf(ops, OpKind::kMin);
  for (std::size_t s = 0; s + 1 < queries.starts.size(); ++s) {
    auto& at = pending[P + static_cast<std::size_t>(ops[queries.positions[queries.starts[s]]].index)];
    for (auto i = queries.starts[s]; i < queries.starts[s + 1]; ++i) at.push_back({queries.positions[i], 0, false});
  }
  out.stats.query_levels.push_back(height_);
  for (int depth = height_ - 1; depth >= 0; --depth) {
    const std::size_t first = std::size_t{1} << depth;
    par::for_each_index(first, [&](std::size_t j) {
      const std::size_t b = first + j;
      auto& from_left = pending[2 * b];
      auto& from_right = pending[2 * b + 1];
      if (from_left.empty() && from_right.empty()) return;
      for (auto& q : from_left) q.from_right = false;
      for (auto& q : from_right) q.from_right = true;
      std::vector<QueryItem> merged;
      merged.reserve(from_left.size() + from_right.size());
      std::merge(from_left.begin(), from_left.end(), from_right.begin(), from_right.end(), std::back_inserter(merged),
                 [](const QueryItem& x, const QueryItem& y) { return x.position < y.position; });
      const NodeBatchState& node = state[b];
      const auto deltas = last_value_before(node.relevant, node.delta, merged, delta_[b]);
      for (std::size_t i = 0; i < merged.size(); ++i) {
        QueryItem& q = merged[i];
        const Weight delta = deltas[i];
        const Weight d_left = q.from_right ? 0 : q.d;
        if (delta > 0) {
          q.d = d_left;
        } else if (q.from_right && q.d + delta < 0) {
          // keep d of the right child
        } else {
          q.d = d_left - delta;
        }
      }
      pending[b] = std::move(merged);
      std::vector<QueryItem>().swap(from_left);
      std::vector<QueryItem>().swap(from_right);
    }, 16);
    out.stats.query_levels.push_back(depth);
  }
  {
    const auto& at_root = pending[1];
    const auto mins = last_value_before(root.relevant, root_mins, at_root, root_min_);
    for (std::size_t i = 0; i < at_root.size(); ++i) {
      out.results[result_slot[static_cast<std::size_t>(at_root[i].position)]] = at_root[i].d + mins[i];
    }
  }

  for (std::size_t b = 1; b < 2 * P; ++b) {
    out.stats.node_work += static_cast<std::int64_t>(state[b].relevant.size()) + (b < P ? 1 : 0);
  }

  // Commit the post-batch state.
  std::vector<Weight> suffix(n_ + 1, 0);
  for (const PrefixOp& op : ops) {
    if (op.kind == OpKind::kAdd) suffix[static_cast<std::size_t>(op.index)] += op.x;
  }
  for (std::size_t i = n_; i-- > 0;) {
    suffix[i] += suffix[i + 1];
    leaf_[i] += suffix[i];
  }
  for (std::size_t b = 1; b < P; ++b) {
    if (!state[b].delta.empty()) delta_[b] = state[b].delta.back();
  }
  if (!root_mins.empty()) root_min_ = root_mins.back();
  out.final_weights.assign(leaf_.begin(), leaf_.begin() + static_cast<std::ptrdiff_t>(n_));

  if (trace != nullptr) *trace = std::move(state);
  return out;
}

}  // namespace parcut
