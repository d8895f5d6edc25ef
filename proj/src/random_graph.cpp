#include "parcut/random_graph.hpp"

#include <algorithm>
#include <numeric>

namespace parcut {

RootedTree random_tree(VertexId n, Rng& rng, bool shuffle) {
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  if (shuffle) std::shuffle(label.begin(), label.end(), rng);
  std::vector<VertexId> parent(n);
  parent[label[0]] = label[0];
  for (VertexId v = 1; v < n; ++v) parent[label[v]] = label[rng.below(static_cast<std::uint64_t>(v))];
  return RootedTree::from_parents(std::move(parent), label[0]);
}

Graph random_connected_graph(VertexId n, std::int64_t extra, Weight max_weight, Rng& rng) {
  std::vector<Edge> edges;
  const auto weight = [&] { return static_cast<Weight>(rng.below(static_cast<std::uint64_t>(max_weight))) + 1; };
  const RootedTree t = random_tree(n, rng);
  for (VertexId v = 0; v < n; ++v) {
    if (v != t.root()) edges.push_back({v, t.parent(v), weight()});
  }
  for (std::int64_t i = 0; i < extra && n > 1; ++i) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u != v) edges.push_back({u, v, weight()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

RootedTree random_spanning_tree(const Graph& g, Rng& rng) {
  std::vector<double> cost(g.num_edges());
  for (auto& c : cost) c = rng.uniform();
  return spanning_tree(g, cost);
}

}  // namespace parcut
