#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parcut/driver.hpp"

namespace {

nlohmann::json to_json(const parcut::RunReport& r, const std::vector<std::string>& tokens, std::uint64_t seed) {
  nlohmann::json side = nlohmann::json::array();
  for (std::size_t v = 0; v < r.side.size(); ++v) {
    if (r.side[v]) side.push_back(tokens[v]);
  }
  nlohmann::json out = {
      {"value", r.value},
      {"side", side},
      {"seed", seed},
      {"trees_tried", r.trees_tried},
      {"work",
       {{"packing_probes", r.work.packing_probes},
        {"mst_calls", r.work.mst_calls},
        {"tree_ops", r.work.tree_ops},
        {"prefix_ops", r.work.prefix_ops},
        {"node_work", r.work.node_work},
        {"max_phases", r.work.max_phases}}},
  };
  if (r.oracle_agreement) out["oracle_agreement"] = *r.oracle_agreement;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cut of a weighted undirected graph"};
  parcut::RunConfig cfg;
  std::string path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;

  app.add_option("--seed", seed, "Random seed (default: $PARCUT_SEED, else 0)");
  app.add_option("--threads", cfg.threads, "Worker threads, 0 for all")->check(CLI::NonNegativeNumber);
  app.add_option("--trees", cfg.packing.tree_count, "Trees drawn from the packing (default ceil(3 ln n))")
      ->check(CLI::PositiveNumber);
  app.add_option("--epsilon", cfg.packing.epsilon, "Packing accuracy")->check(CLI::Range(0.0, 1.0));
  app.add_option("--retries", cfg.retries, "Extra packings with fresh randomness")->check(CLI::NonNegativeNumber);
  app.add_flag("--oracle", cfg.oracle_check, "Compare against Stoer-Wagner; exit 3 on disagreement");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("graph", path, "Edge list: one 'u v w' per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cfg.packing.epsilon <= 0.0 || cfg.packing.epsilon >= 1.0) {
    std::cerr << "--epsilon must lie strictly between 0 and 1\n";
    return 2;
  }

  if (!seed) {
    if (const char* env = std::getenv("PARCUT_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "PARCUT_SEED is not a number: " << env << "\n";
        return 2;
      }
    }
  }
  cfg.seed = seed.value_or(0);

  parcut::ParsedGraph parsed;
  try {
    parsed = parcut::read_graph_file(path);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 1;
  }

  parcut::RunReport report;
  try {
    report = parcut::minimum_cut(parsed.graph, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (format == "json") {
    std::cout << to_json(report, parsed.tokens, cfg.seed).dump(2) << "\n";
  } else {
    std::cout << "value " << report.value << "\n";
    for (std::size_t v = 0; v < report.side.size(); ++v) {
      if (report.side[v]) std::cout << parsed.tokens[v] << "\n";
    }
  }
  if (report.oracle_agreement && !*report.oracle_agreement) {
    std::cerr << "oracle disagreement\n";
    return 3;
  }
  return 0;
}
