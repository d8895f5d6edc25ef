#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"
#include "parcut/tree.hpp"

namespace parcut {

struct PackingParams {
  double epsilon = 0.2;
  // Desired packing value of the skeleton, in units of ln n. The sampling
  // probability is halved until the value lies in [target/2, 2 target] ln n.
  double target_skeleton_cut = 12.0;
  double tree_count_multiplier = 3.0;
  // c in ceil(c / epsilon^2 * ln n) greedy iterations.
  double iteration_constant = 1.0;
  // Exact number of draws when positive, overriding the multiplier.
  int tree_count = 0;
};

// Each unit of weight survives with probability p; an edge of weight w
// becomes Binomial(w, p) parallel unit edges, stored as one edge of that
// multiplicity. origin maps skeleton edges back to edges of g.
struct Skeleton {
  Graph graph;
  std::vector<EdgeId> origin;
};
Skeleton sample_skeleton(const Graph& g, double p, Rng& rng);

struct TreePacking {
  std::vector<std::vector<EdgeId>> tree_edges;  // distinct trees, edge ids of the packed graph
  std::vector<double> tree_weight;
  std::vector<double> loads;  // per edge: times used / capacity, scaled like tree_weight
  double value = 0;           // sum of tree_weight
  int iterations = 0;
};

// Greedy packing: each iteration takes a minimum spanning tree under the
// current relative loads (uses / weight) and charges its edges. Tree weights
// are normalised so that the most loaded edge is exactly at capacity.
// Throws DisconnectedGraph.
TreePacking greedy_tree_packing(const Graph& g, double epsilon, int iterations);

int packing_iterations(VertexId n, const PackingParams& params);

// Completes a forest of skeleton edges (given as edges of g) to a spanning
// tree of g with further edges of g, rooted at vertex 0.
RootedTree complete_spanning_tree(const Graph& g, std::span<const EdgeId> forest);

// Draws ceil(multiplier ln n) trees proportionally to tree_weight with
// replacement; returns the distinct indices in ascending order.
std::vector<std::size_t> select_tree_indices(const TreePacking& packing, VertexId n, const PackingParams& params,
                                             Rng& rng);

struct CandidateTrees {
  std::vector<RootedTree> trees;
  double probability = 1.0;  // sampling probability of the skeleton used
  double packing_value = 0;
  int probes = 0;            // packings computed during the search for p
  std::int64_t mst_calls = 0;
};

// Skeleton search, packing, lifting and selection.
CandidateTrees candidate_trees(const Graph& g, const PackingParams& params, Rng& rng);

}  // namespace parcut
