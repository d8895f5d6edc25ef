// Total operation counts of minimum_cut against m log^4 n on random graphs.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "parcut/driver.hpp"
#include "parcut/random_graph.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Work counters of minimum_cut on random graphs"};
  std::vector<int> sizes{100, 300, 1000, 3000, 10000};
  int degree = 4;
  std::uint64_t seed = 1;
  app.add_option("--sizes", sizes, "Vertex counts");
  app.add_option("--degree", degree, "Extra edges per vertex");
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);

  std::printf("%8s %9s %6s %12s %12s %14s %10s %8s\n", "n", "m", "trees", "tree_ops", "node_work", "m*log2(n)^4",
              "ratio", "seconds");
  for (int n : sizes) {
    parcut::Rng rng(seed + static_cast<std::uint64_t>(n));
    const parcut::Graph g = parcut::random_connected_graph(n, static_cast<std::int64_t>(degree) * n, 10, rng);
    parcut::RunConfig cfg;
    cfg.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const parcut::RunReport r = parcut::minimum_cut(g, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double bound = g.num_edges() * std::pow(std::log2(static_cast<double>(n)), 4);
    const double total = static_cast<double>(r.work.node_work + r.work.prefix_ops + r.work.tree_ops);
    std::printf("%8d %9d %6d %12lld %12lld %14.0f %10.4f %8.2f\n", n, g.num_edges(), r.trees_tried,
                static_cast<long long>(r.work.tree_ops), static_cast<long long>(r.work.node_work), bound,
                total / bound, secs);
  }
  return 0;
}
