#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parcut/decomp.hpp"
#include "parcut/graph.hpp"
#include "parcut/minpath.hpp"
#include "parcut/rng.hpp"
#include "parcut/tree.hpp"

namespace parcut {

enum class CutKind : std::uint8_t { kOneEdge, kIncomparable, kComparable };

// A cut crossing one or two tree edges, each named by its child endpoint.
// Incomparable: side lower↓ ∪ upper↓. Comparable: upper↓ ∖ lower↓ with upper
// a proper ancestor of lower. One edge: lower↓.
struct CutCandidate {
  Weight value = 0;
  CutKind kind = CutKind::kOneEdge;
  VertexId lower = kNoVertex;
  VertexId upper = kNoVertex;
};

// out(v) = sum of vals over v↓, accumulated path by path in phase order.
std::vector<Weight> subtree_sums(const RootedTree& t, const PathDecomposition& d, std::span<const Weight> vals);
std::vector<Weight> subtree_sums(const RootedTree& t, std::span<const Weight> vals);

// rho(v): total weight of edges with both endpoints in v↓.
std::vector<Weight> lca_subtree_weights(const Graph& g, const RootedTree& t);

// C(v↓) for every v; the root's entry is 0 (its side is all of V).
std::vector<Weight> one_edge_cut_values(const Graph& g, const RootedTree& t);

// Per vertex, the times of its upward and downward visit; 0 for vertices
// outside the boughs. Boughs are walked in the given order.
struct VisitTimes {
  std::int64_t up = 0;
  std::int64_t down = 0;
};
std::vector<VisitTimes> visit_times(const RootedTree& t, std::span<const Bough> boughs);

struct BatchQuery {
  VertexId v = kNoVertex;  // bough vertex the offset belongs to
  VertexId x = kNoVertex;  // queried vertex
  Weight offset = 0;
};

struct OperationBatch {
  std::vector<TreeOp> ops;  // Min ops carry an index into queries as tag
  std::vector<BatchQuery> queries;
};

// Walk for cuts v↓ ∪ t↓: the bough is masked by +inf at its leaf, every
// edge (y, x) of a visited vertex adds -2w on x's root path, and each such x
// is queried. cutvals are C(.↓) per vertex of t.
OperationBatch generate_incomparable_batch(const Graph& g, const RootedTree& t, std::span<const Bough> boughs,
                                           std::span<const Weight> cutvals);

// Walk for cuts t↓ ∖ v↓: every edge of a visited vertex adds +2w on the
// neighbour's root path and parent(v) is queried.
OperationBatch generate_comparable_batch(const Graph& g, const RootedTree& t, std::span<const Bough> boughs,
                                         std::span<const Weight> cutvals, std::span<const Weight> rho);

struct PhaseSequence {
  std::vector<Graph> graphs;
  std::vector<RootedTree> trees;
  std::vector<std::vector<VertexId>> to_original;
  std::vector<std::vector<Bough>> boughs;
  std::vector<Weight> cutvals;  // C(v↓) in the original tree
  std::vector<Weight> rho;      // rho(v) in the original graph and tree

  [[nodiscard]] int size() const { return static_cast<int>(graphs.size()); }
};

// G1 = g, T1 = t; G(i+1) merges every bough vertex of Ti into the parent
// of its bough's top. Stops once a tree has a single vertex or is a path.
PhaseSequence build_phases(const Graph& g, const RootedTree& t, Rng& rng);

struct TwoCutStats {
  int phases = 0;
  std::int64_t tree_ops = 0;
  std::int64_t prefix_ops = 0;
  std::int64_t node_work = 0;
  std::size_t max_expansion = 0;
  bool node_work_within_bound = true;
  bool batch_sizes_within_bound = true;
  bool weights_restored = true;
};

// Smallest cut of g crossing at most two edges of t (exact).
CutCandidate two_edge_cut(const Graph& g, const RootedTree& t, Rng& rng, TwoCutStats* stats = nullptr);

// Side of the cut described by candidate. Throws on identical or invalid edges.
VertexMask recover_partition(const RootedTree& t, const CutCandidate& candidate);

}  // namespace parcut
