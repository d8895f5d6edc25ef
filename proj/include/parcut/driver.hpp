#pragma once

#include <cstdint>
#include <optional>

#include "parcut/graph.hpp"
#include "parcut/packing.hpp"

namespace parcut {

struct RunConfig {
  std::uint64_t seed = 0;
  int threads = 0;  // 0: all hardware threads
  PackingParams packing;
  bool oracle_check = false;
  int retries = 0;  // extra packings with fresh streams; the best result wins
};

struct WorkCounters {
  std::int64_t packing_probes = 0;
  std::int64_t mst_calls = 0;
  std::int64_t tree_ops = 0;
  std::int64_t prefix_ops = 0;
  std::int64_t node_work = 0;
  int max_phases = 0;
  bool node_work_within_bound = true;
  bool batch_sizes_within_bound = true;
  bool weights_restored = true;
};

struct RunReport {
  Weight value = 0;
  VertexMask side;  // always contains vertex 0
  int trees_tried = 0;
  WorkCounters work;
  std::optional<bool> oracle_agreement;
};

// Minimum cut with high probability. The reported side is re-evaluated and
// always has the reported value. A disconnected graph yields 0.
RunReport minimum_cut(const Graph& g, const RunConfig& cfg);

}  // namespace parcut
