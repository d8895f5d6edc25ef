#include "parcut/driver.hpp"

#include <limits>
#include <memory>
#include <stdexcept>

#include <oneapi/tbb/global_control.h>

#include "parcut/parallel.hpp"
#include "parcut/stoer_wagner.hpp"
#include "parcut/twocut.hpp"

namespace parcut {

namespace {

struct TreeOutcome {
  CutCandidate cut;
  TwoCutStats stats;
};

void normalise(VertexMask& side) {
  if (!side.empty() && !side[0]) side.flip();
}

}  // namespace

RunReport minimum_cut(const Graph& g, const RunConfig& cfg) {
  if (cfg.threads < 0) throw std::invalid_argument("thread count must be non-negative");
  if (cfg.retries < 0) throw std::invalid_argument("retry count must be non-negative");
  if (g.num_vertices() < 2) throw GraphError("a cut needs at least two vertices");

  std::unique_ptr<tbb::global_control> limit;
  if (cfg.threads > 0) {
    limit = std::make_unique<tbb::global_control>(tbb::global_control::max_allowed_parallelism,
                                                  static_cast<std::size_t>(cfg.threads));
  }

  RunReport report;
  const Components comps = connected_components(g);
  if (comps.count > 1) {
    report.value = 0;
    report.side.assign(g.num_vertices(), false);
    for (VertexId v = 0; v < g.num_vertices(); ++v) report.side[v] = comps.label[v] == comps.label[0];
  } else {
    const Rng base(cfg.seed);
    report.value = std::numeric_limits<Weight>::max();
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
      Rng packing_rng = attempt == 0 ? stream(base, Stream::kPacking)
                                     : stream(base, Stream::kRetry).split(static_cast<std::uint64_t>(attempt));
      const CandidateTrees candidates = candidate_trees(g, cfg.packing, packing_rng);
      report.work.packing_probes += candidates.probes;
      report.work.mst_calls += candidates.mst_calls;

      const Rng cut_base = stream(base, Stream::kTwoCut).split(static_cast<std::uint64_t>(attempt));
      std::vector<TreeOutcome> outcomes(candidates.trees.size());
      par::for_each_index(outcomes.size(), [&](std::size_t i) {
        Rng r = cut_base.split(i);
        outcomes[i].cut = two_edge_cut(g, candidates.trees[i], r, &outcomes[i].stats);
      }, 1);

      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& [cut, stats] = outcomes[i];
        ++report.trees_tried;
        report.work.tree_ops += stats.tree_ops;
        report.work.prefix_ops += stats.prefix_ops;
        report.work.node_work += stats.node_work;
        report.work.max_phases = std::max(report.work.max_phases, stats.phases);
        report.work.node_work_within_bound = report.work.node_work_within_bound && stats.node_work_within_bound;
        report.work.batch_sizes_within_bound = report.work.batch_sizes_within_bound && stats.batch_sizes_within_bound;
        report.work.weights_restored = report.work.weights_restored && stats.weights_restored;
        if (cut.value < report.value) {
          report.value = cut.value;
          report.side = recover_partition(candidates.trees[i], cut);
        }
      }
    }
  }

  normalise(report.side);
  if (cut_value(g, report.side) != report.value) throw std::logic_error("reported side does not have the reported value");
  if (cfg.oracle_check) report.oracle_agreement = stoer_wagner(g).value == report.value;
  return report;
}

}  // namespace parcut
