#include "parcut/minpath.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "parcut/parallel.hpp"

namespace parcut {

MinPathStructure::MinPathStructure(const RootedTree& t, std::span<const Weight> weights,
                                   PathDecomposition decomposition)
    : decomposition_(std::move(decomposition)) {
  const VertexId n = t.size();
  if (weights.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("one weight per vertex required");

  prefix_.reserve(decomposition_.paths.size());
  for (const auto& path : decomposition_.paths) {
    std::vector<Weight> w(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) w[i] = weights[path[i]];
    prefix_.emplace_back(std::move(w));
  }

  // The walk from v leaves its own path at the front and enters the parent
  // path at the attachment vertex, whose prefix is then covered entirely.
  routes_.reserve(static_cast<std::size_t>(n) * 2);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId x = v; x != kNoVertex;) {
      const PathPosition at = decomposition_.path_of[x];
      routes_.push_back({at.path, at.position});
      x = decomposition_.attach[at.path];
    }
    route_offsets_.push_back(routes_.size());
  }
}

MinPathStructure::MinPathStructure(const RootedTree& t, std::span<const Weight> weights, Rng& rng)
    : MinPathStructure(t, weights, decompose(t, rng)) {}

std::vector<Weight> MinPathStructure::weights() const {
  std::vector<Weight> out(size());
  for (std::size_t p = 0; p < prefix_.size(); ++p) {
    const auto w = prefix_[p].weights();
    for (std::size_t i = 0; i < w.size(); ++i) out[decomposition_.paths[p][i]] = w[i];
  }
  return out;
}

TreeBatchResult MinPathStructure::execute_tree_batch(std::span<const TreeOp> ops) {
  TreeBatchResult out;
  for (std::size_t i = 1; i < ops.size(); ++i) {
    const auto& a = ops[i - 1];
    const auto& b = ops[i];
    if (a.time > b.time || (a.time == b.time && a.kind == OpKind::kMin && b.kind == OpKind::kAdd)) {
      throw std::invalid_argument("tree batch is not ordered by time (updates first)");
    }
  }

  // Expand every op into one prefix op per routed path.
  struct Expanded {
    std::int32_t path;
    std::size_t origin;
    PrefixOp op;
  };
  std::vector<std::size_t> expand_offset(ops.size() + 1, 0);
  std::size_t queries = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].vertex < 0 || ops[i].vertex >= size()) throw std::out_of_range("unknown vertex");
    const auto steps = route(ops[i].vertex).size();
    out.stats.max_expansion = std::max(out.stats.max_expansion, steps);
    expand_offset[i + 1] = expand_offset[i] + steps;
    if (ops[i].kind == OpKind::kMin) ++queries;
  }
  std::vector<Expanded> expanded(expand_offset.back());
  par::for_each_index(ops.size(), [&](std::size_t i) {
    const TreeOp& op = ops[i];
    std::size_t k = expand_offset[i];
    for (const RouteStep& step : route(op.vertex)) {
      expanded[k++] = {step.path, i, PrefixOp{op.time, op.kind, step.position, op.x, op.offset, op.tag}};
    }
  });
  out.stats.prefix_ops = static_cast<std::int64_t>(expanded.size());

  // One stable sort groups by path and keeps each group in time order.
  std::stable_sort(expanded.begin(), expanded.end(),
                   [](const Expanded& a, const Expanded& b) { return a.path < b.path; });
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    if (i == 0 || expanded[i].path != expanded[i - 1].path) group_start.push_back(i);
  }
  group_start.push_back(expanded.size());

  const std::size_t groups = group_start.size() - 1;
  std::vector<PrefixBatchResult> group_results(groups);
  par::for_each_index(groups, [&](std::size_t g) {
    const auto begin = group_start[g];
    const auto end = group_start[g + 1];
    std::vector<PrefixOp> batch(end - begin);
    for (auto i = begin; i < end; ++i) batch[i - begin] = expanded[i].op;
    group_results[g] = prefix_[static_cast<std::size_t>(expanded[begin].path)].execute_batch(batch);
  }, 1);

  // Fold the per-path minima of each query in a fixed order.
  std::vector<std::size_t> result_slot(ops.size(), 0);
  for (std::size_t i = 0, q = 0; i < ops.size(); ++i) {
    if (ops[i].kind == OpKind::kMin) result_slot[i] = q++;
  }
  out.results.assign(queries, std::numeric_limits<Weight>::max());
  for (std::size_t g = 0; g < groups; ++g) {
    const auto& r = group_results[g];
    std::size_t q = 0;
    for (auto i = group_start[g]; i < group_start[g + 1]; ++i) {
      if (expanded[i].op.kind != OpKind::kMin) continue;
      Weight& slot = out.results[result_slot[expanded[i].origin]];
      slot = std::min(slot, r.results[q++]);
    }
    out.stats.node_work += r.stats.node_work;
    const auto n = static_cast<std::int64_t>(prefix_[static_cast<std::size_t>(expanded[group_start[g]].path)].size());
    const auto k = r.stats.updates + r.stats.queries;
    const std::int64_t ceil_log = n <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(n - 1));
    if (r.stats.node_work > k * (ceil_log + 1) + 2 * n) out.stats.node_work_within_bound = false;
  }
  return out;
}

}  // namespace parcut
