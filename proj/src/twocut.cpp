#include "parcut/twocut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "parcut/lca.hpp"
#include "parcut/parallel.hpp"

namespace parcut {

std::vector<Weight> subtree_sums(const RootedTree& t, const PathDecomposition& d, std::span<const Weight> vals) {
  const VertexId n = t.size();
  if (vals.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("one value per vertex required");
  std::vector<Weight> acc(vals.begin(), vals.end());
  std::vector<Weight> out(n, 0);

  std::vector<std::vector<std::size_t>> by_phase(d.num_phases());
  for (std::size_t p = 0; p < d.paths.size(); ++p) by_phase[d.phase[p]].push_back(p);

  // A path's attachment vertex survives the phase that peels the path, so
  // every child contribution is in acc before its path is summed.
  for (const auto& paths : by_phase) {
    par::for_each_index(paths.size(), [&](std::size_t i) {
      const auto& path = d.paths[paths[i]];
      Weight running = 0;
      for (auto it = path.rbegin(); it != path.rend(); ++it) out[*it] = running += acc[*it];
    }, 16);
    for (std::size_t p : paths) {
      if (d.attach[p] != kNoVertex) acc[d.attach[p]] += out[d.paths[p].front()];
    }
  }
  return out;
}

std::vector<Weight> subtree_sums(const RootedTree& t, std::span<const Weight> vals) {
  return subtree_sums(t, decompose_deterministic(t), vals);
}

std::vector<Weight> lca_subtree_weights(const Graph& g, const RootedTree& t) {
  if (g.num_vertices() != t.size()) throw GraphError("tree does not span the graph");
  const LcaIndex index(t);
  std::vector<Weight> deposit(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) deposit[index.lca(e.u, e.v)] += e.w;
  return subtree_sums(t, deposit);
}

std::vector<Weight> one_edge_cut_values(const Graph& g, const RootedTree& t) {
  const VertexId n = g.num_vertices();
  std::vector<Weight> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.weighted_degree(v);
  auto out = subtree_sums(t, degree);
  const auto rho = lca_subtree_weights(g, t);
  for (VertexId v = 0; v < n; ++v) out[v] -= 2 * rho[v];
  return out;
}

std::vector<VisitTimes> visit_times(const RootedTree& t, std::span<const Bough> boughs) {
  std::vector<VisitTimes> times(t.size());
  std::int64_t base = 0;
  for (const Bough& b : boughs) {
    const auto len = static_cast<std::int64_t>(b.vertices.size());
    for (std::int64_t j = 0; j < len; ++j) times[b.vertices[j]] = {base + 1 + j, base + 2 * len - j};
    base += 2 * len;
  }
  return times;
}

namespace {

// Generates each bough's ops independently, then concatenates them in bough
// order (their time ranges are disjoint and increasing) and rebases tags.
template <typename PerBough>
OperationBatch assemble(std::span<const Bough> boughs, PerBough per_bough) {
  std::vector<std::int64_t> base(boughs.size() + 1, 0);
  for (std::size_t i = 0; i < boughs.size(); ++i) {
    base[i + 1] = base[i] + 2 * static_cast<std::int64_t>(boughs[i].vertices.size());
  }
  std::vector<OperationBatch> parts(boughs.size());
  par::for_each_index(boughs.size(), [&](std::size_t i) { parts[i] = per_bough(boughs[i], base[i]); }, 16);

  OperationBatch out;
  for (auto& part : parts) {
    const auto tag_base = static_cast<std::int64_t>(out.queries.size());
    for (TreeOp op : part.ops) {
      if (op.kind == OpKind::kMin) op.tag += tag_base;
      out.ops.push_back(op);
    }
    out.queries.insert(out.queries.end(), part.queries.begin(), part.queries.end());
  }
  std::stable_sort(out.ops.begin(), out.ops.end(), [](const TreeOp& a, const TreeOp& b) {
    return a.time != b.time ? a.time < b.time : a.kind < b.kind;
  });
  return out;
}

TreeOp add_op(std::int64_t time, VertexId v, Weight x) { return {time, OpKind::kAdd, v, x, 0, 0}; }

TreeOp min_op(std::int64_t time, VertexId v, Weight offset, std::size_t tag) {
  return {time, OpKind::kMin, v, 0, offset, static_cast<std::int64_t>(tag)};
}

}  // namespace

OperationBatch generate_incomparable_batch(const Graph& g, const RootedTree& t, std::span<const Bough> boughs,
                                           std::span<const Weight> cutvals) {
  (void)t;
  return assemble(boughs, [&](const Bough& b, std::int64_t base) {
    const auto len = static_cast<std::int64_t>(b.vertices.size());
    // Best C(y↓) over y at or above each position: a partner found while
    // visiting y_j also pairs with any y above it that it is not adjacent to.
    std::vector<VertexId> best(len);
    for (std::int64_t j = len - 1; j >= 0; --j) {
      const VertexId y = b.vertices[j];
      best[j] = (j + 1 < len && cutvals[best[j + 1]] <= cutvals[y]) ? best[j + 1] : y;
    }

    OperationBatch part;
    for (std::int64_t j = 0; j < len; ++j) {
      const VertexId y = b.vertices[j];
      const std::int64_t time = base + 1 + j;
      if (j == 0) part.ops.push_back(add_op(time, y, kInfinity));
      for (const Incidence& inc : g.neighbors(y)) part.ops.push_back(add_op(time, inc.neighbor, -2 * inc.weight));
      for (const Incidence& inc : g.neighbors(y)) {
        part.ops.push_back(min_op(time, inc.neighbor, cutvals[best[j]], part.queries.size()));
        part.queries.push_back({best[j], inc.neighbor, cutvals[best[j]]});
      }
    }
    for (std::int64_t j = len - 1; j >= 0; --j) {
      const VertexId y = b.vertices[j];
      const std::int64_t time = base + 2 * len - j;
      const auto nb = g.neighbors(y);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) part.ops.push_back(add_op(time, it->neighbor, 2 * it->weight));
      if (j == 0) part.ops.push_back(add_op(time, y, -kInfinity));
    }
    return part;
  });
}

OperationBatch generate_comparable_batch(const Graph& g, const RootedTree& t, std::span<const Bough> boughs,
                                         std::span<const Weight> cutvals, std::span<const Weight> rho) {
  return assemble(boughs, [&](const Bough& b, std::int64_t base) {
    const auto len = static_cast<std::int64_t>(b.vertices.size());
    OperationBatch part;
    for (std::int64_t j = 0; j < len; ++j) {
      const VertexId v = b.vertices[j];
      const std::int64_t time = base + 1 + j;
      for (const Incidence& inc : g.neighbors(v)) part.ops.push_back(add_op(time, inc.neighbor, 2 * inc.weight));
      if (v == t.root()) continue;
      const Weight offset = -(4 * rho[v] + cutvals[v]);
      part.ops.push_back(min_op(time, t.parent(v), offset, part.queries.size()));
      part.queries.push_back({v, t.parent(v), offset});
    }
    for (std::int64_t j = len - 1; j >= 0; --j) {
      const VertexId v = b.vertices[j];
      const std::int64_t time = base + 2 * len - j;
      const auto nb = g.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) part.ops.push_back(add_op(time, it->neighbor, -2 * it->weight));
    }
    return part;
  });
}

PhaseSequence build_phases(const Graph& g, const RootedTree& t, Rng& rng) {
  if (g.num_vertices() != t.size()) throw GraphError("tree does not span the graph");
  PhaseSequence ps;
  ps.cutvals = one_edge_cut_values(g, t);
  ps.rho = lca_subtree_weights(g, t);

  const Rng base(rng());
  Graph gi = g;
  RootedTree ti = t;
  std::vector<VertexId> to_original(t.size());
  std::iota(to_original.begin(), to_original.end(), 0);

  for (int phase = 0; ti.size() >= 2; ++phase) {
    Rng phase_rng = base.split(static_cast<std::uint64_t>(phase));
    auto boughs = find_boughs(ti, phase_rng);
    const bool is_path = boughs.size() == 1 && boughs.front().top() == ti.root();

    VertexMask keep(ti.size(), true);
    for (const Bough& b : boughs) {
      for (VertexId v : b.vertices) keep[v] = false;
    }
    ps.graphs.push_back(std::move(gi));
    ps.trees.push_back(std::move(ti));
    ps.to_original.push_back(std::move(to_original));
    ps.boughs.push_back(std::move(boughs));
    if (is_path) break;

    const RootedTree& prev_tree = ps.trees.back();
    InducedTree next = induced_subtree(prev_tree, keep);
    std::vector<VertexId> map(prev_tree.size());
    for (VertexId v = 0; v < prev_tree.size(); ++v) map[v] = next.to_inner[v];
    for (const Bough& b : ps.boughs.back()) {
      const VertexId into = next.to_inner[prev_tree.parent(b.top())];
      for (VertexId v : b.vertices) map[v] = into;
    }
    gi = contract(ps.graphs.back(), map);
    to_original.assign(next.tree.size(), kNoVertex);
    for (VertexId v = 0; v < next.tree.size(); ++v) to_original[v] = ps.to_original.back()[next.to_outer[v]];
    ti = std::move(next.tree);
  }
  return ps;
}

namespace {

struct JobBest {
  bool found = false;
  Weight value = std::numeric_limits<Weight>::max();
  VertexId v = kNoVertex;  // original ids
  VertexId x = kNoVertex;
};

struct JobResult {
  JobBest best;
  TreeBatchStats stats;
  std::int64_t tree_ops = 0;
  bool sizes_ok = true;
  bool restored = true;
};

// Exact best partner of v among the vertices on x's root path, found by
// depositing each edge leaving v↓ at its meeting point with that path.
CutCandidate best_partner(const Graph& g, const RootedTree& t, const LcaIndex& lca, std::span<const Weight> cutvals,
                          CutKind kind, VertexId v, VertexId x) {
  std::vector<Weight> deposit(t.size(), 0);
  const auto order = t.preorder();
  for (VertexId i = t.first(v); i <= t.last(v); ++i) {
    for (const Incidence& inc : g.neighbors(order[i])) {
      if (!t.is_ancestor(v, inc.neighbor)) deposit[lca.lca(inc.neighbor, x)] += inc.weight;
    }
  }
  CutCandidate best{std::numeric_limits<Weight>::max(), kind, v, kNoVertex};
  Weight running = 0;
  for (VertexId u = x;; u = t.parent(u)) {
    running += deposit[u];
    if (u == t.root()) break;
    Weight value;
    if (kind == CutKind::kIncomparable) {
      if (t.is_ancestor(u, v) || t.is_ancestor(v, u)) continue;
      value = cutvals[v] + cutvals[u] - 2 * running;
    } else {
      if (u == v || !t.is_ancestor(u, v)) continue;
      value = cutvals[u] - cutvals[v] + 2 * running;
    }
    if (value < best.value) {
      best.value = value;
      best.upper = u;
    }
  }
  return best;
}

}  // namespace

CutCandidate two_edge_cut(const Graph& g, const RootedTree& t, Rng& rng, TwoCutStats* stats) {
  if (g.num_vertices() != t.size()) throw GraphError("tree does not span the graph");
  if (g.num_vertices() < 2) throw GraphError("a cut needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedGraph();

  const Rng base(rng());
  Rng phase_rng = base.split(0);
  const PhaseSequence ps = build_phases(g, t, phase_rng);
  const auto& cutvals = ps.cutvals;

  CutCandidate best{std::numeric_limits<Weight>::max(), CutKind::kOneEdge, kNoVertex, kNoVertex};
  for (VertexId v = 0; v < t.size(); ++v) {
    if (v != t.root() && cutvals[v] < best.value) best = {cutvals[v], CutKind::kOneEdge, v, kNoVertex};
  }

  const auto phases = static_cast<std::size_t>(ps.size());
  std::vector<JobResult> jobs(2 * phases);
  par::for_each_index(jobs.size(), [&](std::size_t job) {
    const std::size_t i = job / 2;
    const bool incomparable = job % 2 == 0;
    const Graph& gi = ps.graphs[i];
    const RootedTree& ti = ps.trees[i];
    const auto& to_original = ps.to_original[i];
    std::vector<Weight> cut_i(ti.size());
    for (VertexId x = 0; x < ti.size(); ++x) cut_i[x] = cutvals[to_original[x]];

    std::size_t leaves = 0;
    std::size_t bough_vertices = 0;
    for (const Bough& b : ps.boughs[i]) {
      ++leaves;
      bough_vertices += b.vertices.size();
    }
    const OperationBatch batch =
        incomparable ? generate_incomparable_batch(gi, ti, ps.boughs[i], cut_i)
                     : generate_comparable_batch(gi, ti, ps.boughs[i], cut_i, lca_subtree_weights(gi, ti));

    JobResult& r = jobs[job];
    const auto m = static_cast<std::size_t>(gi.num_edges());
    const auto queries = batch.queries.size();
    const auto updates = batch.ops.size() - queries;
    r.sizes_ok = updates <= 4 * m + 2 * leaves && queries <= 2 * m + bough_vertices;
    r.tree_ops = static_cast<std::int64_t>(batch.ops.size());

    Rng decomp_rng = base.split(1 + job);
    MinPathStructure structure(ti, cut_i, decomp_rng);
    const TreeBatchResult result = structure.execute_tree_batch(batch.ops);
    r.stats = result.stats;
    r.restored = structure.weights() == cut_i;

    for (std::size_t q = 0; q < queries; ++q) {
      const Weight found = result.results[q];
      if (is_masked(found)) continue;
      const Weight value = found + batch.queries[q].offset;
      if (value < r.best.value) {
        r.best = {true, value, to_original[batch.queries[q].v], to_original[batch.queries[q].x]};
      }
    }
  }, 1);

  std::size_t winner = jobs.size();
  for (std::size_t job = 0; job < jobs.size(); ++job) {
    const JobBest& b = jobs[job].best;
    if (b.found && b.value < best.value && (winner == jobs.size() || b.value < jobs[winner].best.value)) winner = job;
  }
  if (winner != jobs.size()) {
    const JobBest& b = jobs[winner].best;
    const CutKind kind = winner % 2 == 0 ? CutKind::kIncomparable : CutKind::kComparable;
    const LcaIndex lca(t);
    CutCandidate found = best_partner(g, t, lca, cutvals, kind, b.v, b.x);
    if (found.upper == kNoVertex || found.value > b.value) {
      throw std::logic_error("two-edge candidate could not be recovered");
    }
    best = found;
  }

  if (stats != nullptr) {
    *stats = TwoCutStats{};
    stats->phases = ps.size();
    for (const JobResult& r : jobs) {
      stats->tree_ops += r.tree_ops;
      stats->prefix_ops += r.stats.prefix_ops;
      stats->node_work += r.stats.node_work;
      stats->max_expansion = std::max(stats->max_expansion, r.stats.max_expansion);
      stats->node_work_within_bound = stats->node_work_within_bound && r.stats.node_work_within_bound;
      stats->batch_sizes_within_bound = stats->batch_sizes_within_bound && r.sizes_ok;
      stats->weights_restored = stats->weights_restored && r.restored;
    }
  }
  return best;
}

VertexMask recover_partition(const RootedTree& t, const CutCandidate& c) {
  const auto valid = [&](VertexId v) { return v >= 0 && v < t.size() && v != t.root(); };
  if (!valid(c.lower)) throw std::invalid_argument("tree edge must be named by a non-root vertex");
  VertexMask side = t.subtree_mask(c.lower);
  if (c.kind == CutKind::kOneEdge) return side;

  if (!valid(c.upper)) throw std::invalid_argument("tree edge must be named by a non-root vertex");
  if (c.upper == c.lower) throw std::invalid_argument("the two tree edges are identical");
  const VertexMask upper = t.subtree_mask(c.upper);
  if (c.kind == CutKind::kIncomparable) {
    if (t.is_ancestor(c.upper, c.lower) || t.is_ancestor(c.lower, c.upper)) {
      throw std::invalid_argument("tree edges are comparable");
    }
    for (std::size_t i = 0; i < side.size(); ++i) side[i] = side[i] || upper[i];
    return side;
  }
  if (!t.is_ancestor(c.upper, c.lower)) throw std::invalid_argument("upper edge is not above lower edge");
  for (std::size_t i = 0; i < side.size(); ++i) side[i] = upper[i] && !side[i];
  return side;
}

}  // namespace parcut
