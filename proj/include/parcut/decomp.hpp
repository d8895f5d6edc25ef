#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parcut/rng.hpp"
#include "parcut/tree.hpp"

namespace parcut {

// Maximal path from a leaf upward that stops at the first vertex whose
// parent has several children (or at the root when the tree is a path).
struct Bough {
  std::vector<VertexId> vertices;  // leaf first, top last

  [[nodiscard]] VertexId leaf() const { return vertices.front(); }
  [[nodiscard]] VertexId top() const { return vertices.back(); }
  friend bool operator==(const Bough&, const Bough&) = default;
};

struct BoughSearchStats {
  int rounds = 0;  // contraction rounds until every inner vertex branches
};

// Boughs of t by random-mate contraction of non-branching chains. The result
// is sorted by leaf id, so it does not depend on the coin flips.
std::vector<Bough> find_boughs(const RootedTree& t, Rng& rng, BoughSearchStats* stats = nullptr);

// Same result; the independent edge sets come from a deterministic 3-coloring.
std::vector<Bough> find_boughs_deterministic(const RootedTree& t, BoughSearchStats* stats = nullptr);

// Proper coloring with colors {0,1,2} of the forest of chains given by
// predecessor links (kNoVertex for chain heads). Each vertex may be the
// predecessor of at most one other vertex.
std::vector<std::uint8_t> three_coloring(std::span<const VertexId> predecessor);

struct PathPosition {
  std::int32_t path = -1;
  std::int32_t position = -1;  // 0 is the vertex nearest the root
};

// Vertex-disjoint root-anchored paths obtained by peeling boughs in phases.
struct PathDecomposition {
  std::vector<std::vector<VertexId>> paths;  // front (nearest root) to back
  std::vector<PathPosition> path_of;         // per vertex
  std::vector<VertexId> attach;              // parent of the path's front, kNoVertex for the root's path
  std::vector<int> phase;                    // bough phase that produced the path (0-based)
  std::vector<std::size_t> leaves_per_phase; // leaf count of the tree at the start of each phase
  int rounds = 0;                            // total contraction rounds over all phases

  [[nodiscard]] int num_phases() const { return static_cast<int>(leaves_per_phase.size()); }
};

PathDecomposition decompose(const RootedTree& t, Rng& rng);
PathDecomposition decompose_deterministic(const RootedTree& t);

// Number of decomposition paths met by the path from leaf to the root.
int paths_on_root_path(const RootedTree& t, const PathDecomposition& d, VertexId leaf);

}  // namespace parcut
