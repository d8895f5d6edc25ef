#include "parcut/tree.hpp"

#include <algorithm>
#include <numeric>

#include "parcut/dsu.hpp"

namespace parcut {

RootedTree RootedTree::from_parents(std::vector<VertexId> parent, VertexId root) {
  const auto n = static_cast<VertexId>(parent.size());
  if (root < 0 || root >= n || parent[root] != root) throw GraphError("invalid tree root");

  RootedTree t;
  t.root_ = root;
  t.parent_ = std::move(parent);

  std::vector<std::size_t> count(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = t.parent_[v];
    if (p < 0 || p >= n) throw GraphError("parent out of range");
    if (v != root) ++count[p + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  t.child_offsets_ = count;
  t.child_list_.resize(n > 0 ? n - 1 : 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != root) t.child_list_[count[t.parent_[v]]++] = v;
  }

  t.depth_.assign(n, 0);
  t.first_.assign(n, kNoVertex);
  t.last_.assign(n, kNoVertex);
  t.preorder_.reserve(n);

  // Iterative preorder; last(v) is the largest preorder index in v's subtree.
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  t.first_[root] = 0;
  t.preorder_.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = t.children(v);
    if (next < kids.size()) {
      const VertexId c = kids[next++];
      t.depth_[c] = t.depth_[v] + 1;
      t.first_[c] = static_cast<VertexId>(t.preorder_.size());
      t.preorder_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      t.last_[v] = static_cast<VertexId>(t.preorder_.size()) - 1;
      stack.pop_back();
    }
  }
  if (static_cast<VertexId>(t.preorder_.size()) != n) throw GraphError("parent links contain a cycle");
  return t;
}

VertexMask RootedTree::subtree_mask(VertexId v) const {
  VertexMask mask(size(), false);
  for (VertexId i = first_[v]; i <= last_[v]; ++i) mask[preorder_[i]] = true;
  return mask;
}

InducedTree induced_subtree(const RootedTree& tree, const VertexMask& keep) {
  InducedTree out;
  out.to_inner.assign(tree.size(), kNoVertex);
  for (VertexId v : tree.preorder()) {
    if (!keep[v]) continue;
    out.to_inner[v] = static_cast<VertexId>(out.to_outer.size());
    out.to_outer.push_back(v);
  }
  if (out.to_outer.empty()) throw GraphError("induced subtree is empty");
  if (!keep[tree.root()]) throw GraphError("induced subtree must contain the root");
  std::vector<VertexId> parent(out.to_outer.size());
  for (std::size_t i = 0; i < out.to_outer.size(); ++i) {
    const VertexId v = out.to_outer[i];
    const VertexId p = tree.parent(v);
    if (out.to_inner[p] == kNoVertex) throw GraphError("kept set is not ancestor-closed");
    parent[i] = out.to_inner[p];
  }
  out.tree = RootedTree::from_parents(std::move(parent), 0);
  return out;
}

RootedTree tree_from_edges(const Graph& g, std::span<const EdgeId> edges, VertexId root) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<VertexId>> adj(n);
  for (EdgeId e : edges) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<VertexId> parent(n, kNoVertex);
  parent[root] = root;
  std::vector<VertexId> stack{root};
  VertexId seen = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (parent[w] == kNoVertex) {
        parent[w] = v;
        ++seen;
        stack.push_back(w);
      }
    }
  }
  if (seen != n) throw DisconnectedGraph();
  return RootedTree::from_parents(std::move(parent), root);
}

std::vector<EdgeId> minimum_spanning_forest(const Graph& g, std::span<const double> edge_cost) {
  if (edge_cost.size() != static_cast<std::size_t>(g.num_edges())) throw GraphError("edge cost has wrong size");
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return edge_cost[a] < edge_cost[b]; });
  DisjointSets sets(g.num_vertices());
  std::vector<EdgeId> forest;
  for (EdgeId e : order) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) forest.push_back(e);
  }
  return forest;
}

RootedTree spanning_tree(const Graph& g, std::span<const double> edge_cost) {
  const auto forest = minimum_spanning_forest(g, edge_cost);
  if (static_cast<VertexId>(forest.size()) + 1 != g.num_vertices()) throw DisconnectedGraph();
  return tree_from_edges(g, forest, 0);
}

}  // namespace parcut
