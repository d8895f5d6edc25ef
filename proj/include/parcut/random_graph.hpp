#pragma once

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"
#include "parcut/tree.hpp"

namespace parcut {

// Uniform random recursive tree: vertex v > 0 picks a parent in [0, v),
// then ids are shuffled so that vertex 0 is not always the root.
RootedTree random_tree(VertexId n, Rng& rng, bool shuffle = true);

// Random spanning tree plus `extra` uniformly chosen edges (self-loops are
// skipped), weights uniform in [1, max_weight].
Graph random_connected_graph(VertexId n, std::int64_t extra, Weight max_weight, Rng& rng);

// Random spanning tree of a connected graph: Kruskal under random costs.
RootedTree random_spanning_tree(const Graph& g, Rng& rng);

}  // namespace parcut
