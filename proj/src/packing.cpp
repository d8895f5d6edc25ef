#include "parcut/packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "parcut/dsu.hpp"
#include "parcut/parallel.hpp"

namespace parcut {

Skeleton sample_skeleton(const Graph& g, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("sampling probability must lie in (0, 1]");
  const auto edges = g.edges();
  std::vector<Weight> kept(edges.size());
  if (p == 1.0) {
    for (std::size_t e = 0; e < edges.size(); ++e) kept[e] = edges[e].w;
  } else {
    const Rng round(rng());
    par::for_each_index(edges.size(), [&](std::size_t e) {
      Rng local = round.split(e);
      std::binomial_distribution<Weight> draw(edges[e].w, p);
      kept[e] = draw(local);
    });
  }
  Skeleton s;
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (kept[e] == 0) continue;
    out.push_back({edges[e].u, edges[e].v, kept[e]});
    s.origin.push_back(static_cast<EdgeId>(e));
  }
  s.graph = Graph(g.num_vertices(), std::move(out));
  return s;
}

int packing_iterations(VertexId n, const PackingParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double ln_n = std::log(std::max<double>(n, 2));
  return std::max(1, static_cast<int>(std::ceil(params.iteration_constant / (params.epsilon * params.epsilon) * ln_n)));
}

TreePacking greedy_tree_packing(const Graph& g, double epsilon, int iterations) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<std::int64_t> uses(m, 0);
  std::vector<double> cost(m, 0.0);
  std::map<std::vector<EdgeId>, std::size_t> index;
  TreePacking packing;
  std::vector<std::int64_t> times;

  for (int it = 0; it < iterations; ++it) {
    auto forest = minimum_spanning_forest(g, cost);
    if (static_cast<VertexId>(forest.size()) + 1 != g.num_vertices()) throw DisconnectedGraph();
    par::for_each_index(forest.size(), [&](std::size_t i) {
      const EdgeId e = forest[i];
      ++uses[e];
      cost[e] = static_cast<double>(uses[e]) / static_cast<double>(g.edge(e).w);
    });
    std::sort(forest.begin(), forest.end());
    auto [pos, fresh] = index.try_emplace(forest, packing.tree_edges.size());
    if (fresh) {
      packing.tree_edges.push_back(std::move(forest));
      times.push_back(0);
    }
    ++times[pos->second];
  }
  packing.iterations = iterations;

  const double max_load = m == 0 ? 1.0 : *std::max_element(cost.begin(), cost.end());
  const double scale = max_load > 0.0 ? 1.0 / max_load : 0.0;
  packing.loads.resize(m);
  for (std::size_t e = 0; e < m; ++e) packing.loads[e] = cost[e] * scale;
  for (std::size_t t = 0; t < times.size(); ++t) {
    packing.tree_weight.push_back(static_cast<double>(times[t]) * scale);
  }
  packing.value = static_cast<double>(iterations) * scale;
  return packing;
}

RootedTree complete_spanning_tree(const Graph& g, std::span<const EdgeId> forest) {
  DisjointSets sets(g.num_vertices());
  std::vector<EdgeId> edges;
  edges.reserve(g.num_vertices());
  for (EdgeId e : forest) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) edges.push_back(e);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) edges.push_back(e);
  }
  return tree_from_edges(g, edges, 0);
}

std::vector<std::size_t> select_tree_indices(const TreePacking& packing, VertexId n, const PackingParams& params,
                                             Rng& rng) {
  if (packing.tree_edges.empty()) throw std::invalid_argument("empty packing");
  if (params.tree_count_multiplier < 1.0) throw std::invalid_argument("tree count multiplier must be at least 1");
  const int draws = params.tree_count > 0
                        ? params.tree_count
                        : static_cast<int>(std::ceil(params.tree_count_multiplier * std::log(std::max<double>(n, 2))));
  std::vector<double> cumulative(packing.tree_weight.size());
  double total = 0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) cumulative[i] = total += packing.tree_weight[i];

  std::vector<bool> chosen(cumulative.size(), false);
  for (int d = 0; d < draws; ++d) {
    const double r = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    if (it == cumulative.end()) --it;
    chosen[static_cast<std::size_t>(it - cumulative.begin())] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.push_back(i);
  }
  return out;
}

CandidateTrees candidate_trees(const Graph& g, const PackingParams& params, Rng& rng) {
  const VertexId n = g.num_vertices();
  const int iterations = packing_iterations(n, params);
  const double ln_n = std::log(std::max<double>(n, 2));
  const double upper = 2.0 * params.target_skeleton_cut * ln_n;

  CandidateTrees out;
  Rng sampler = rng.split(0);
  struct Probe {
    Skeleton skeleton;
    TreePacking packing;
    double p;
  };
  std::optional<Probe> accepted;
  for (double p = 1.0;; p /= 2.0) {
    Skeleton s = sample_skeleton(g, p, sampler);
    if (!is_connected(s.graph)) break;
    TreePacking packing = greedy_tree_packing(s.graph, params.epsilon, iterations);
    ++out.probes;
    out.mst_calls += iterations;
    const bool small_enough = packing.value <= upper;
    accepted = Probe{std::move(s), std::move(packing), p};
    if (small_enough) break;
  }
  if (!accepted) throw DisconnectedGraph();

  out.probability = accepted->p;
  out.packing_value = accepted->packing.value;
  Rng chooser = rng.split(1);
  for (std::size_t i : select_tree_indices(accepted->packing, n, params, chooser)) {
    std::vector<EdgeId> lifted;
    for (EdgeId e : accepted->packing.tree_edges[i]) lifted.push_back(accepted->skeleton.origin[e]);
    out.trees.push_back(complete_spanning_tree(g, lifted));
  }
  return out;
}

}  // namespace parcut
