#pragma once

#include <span>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/types.hpp"

namespace parcut {

// Rooted spanning tree stored as parent links. Tree edges are named by their
// child endpoint. first/last are preorder indices: x is a descendant of v iff
// first(v) <= first(x) <= last(v).
class RootedTree {
 public:
  RootedTree() = default;

  // parent[root] must equal root. Throws GraphError on cycles or
  // unreachable vertices.
  static RootedTree from_parents(std::vector<VertexId> parent, VertexId root);

  [[nodiscard]] VertexId size() const { return static_cast<VertexId>(parent_.size()); }
  [[nodiscard]] VertexId root() const { return root_; }
  [[nodiscard]] VertexId parent(VertexId v) const { return parent_[v]; }
  [[nodiscard]] std::span<const VertexId> parents() const { return parent_; }
  [[nodiscard]] std::span<const VertexId> children(VertexId v) const {
    return {child_list_.data() + child_offsets_[v], child_list_.data() + child_offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t num_children(VertexId v) const {
    return child_offsets_[v + 1] - child_offsets_[v];
  }
  [[nodiscard]] bool is_leaf(VertexId v) const { return num_children(v) == 0; }
  [[nodiscard]] int depth(VertexId v) const { return depth_[v]; }
  [[nodiscard]] VertexId first(VertexId v) const { return first_[v]; }
  [[nodiscard]] VertexId last(VertexId v) const { return last_[v]; }
  [[nodiscard]] std::span<const VertexId> preorder() const { return preorder_; }

  // True iff d is in a's subtree (every vertex is its own ancestor).
  [[nodiscard]] bool is_ancestor(VertexId a, VertexId d) const {
    return first_[a] <= first_[d] && first_[d] <= last_[a];
  }

  // Vertices of v's subtree as a mask.
  [[nodiscard]] VertexMask subtree_mask(VertexId v) const;

 private:
  VertexId root_ = kNoVertex;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offsets_{0};
  std::vector<VertexId> child_list_;
  std::vector<int> depth_;
  std::vector<VertexId> first_;
  std::vector<VertexId> last_;
  std::vector<VertexId> preorder_;
};

// Subtree of `tree` induced by an ancestor-closed vertex set, relabelled to
// dense ids. to_outer maps new ids back; to_inner maps outer ids (kNoVertex
// for dropped vertices).
struct InducedTree {
  RootedTree tree;
  std::vector<VertexId> to_outer;
  std::vector<VertexId> to_inner;
};
InducedTree induced_subtree(const RootedTree& tree, const VertexMask& keep);

// Builds the tree over `n` vertices spanned by `edges` (ids into g), rooted
// at `root`. Throws DisconnectedGraph if they do not span.
RootedTree tree_from_edges(const Graph& g, std::span<const EdgeId> edges, VertexId root = 0);

// Kruskal: edge ids of a minimum spanning forest under edge_cost, ties
// broken by edge id.
std::vector<EdgeId> minimum_spanning_forest(const Graph& g, std::span<const double> edge_cost);

// Minimum spanning tree rooted at vertex 0. Throws DisconnectedGraph.
RootedTree spanning_tree(const Graph& g, std::span<const double> edge_cost);

}  // namespace parcut
