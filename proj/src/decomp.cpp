#include "parcut/decomp.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "parcut/parallel.hpp"

namespace parcut {

namespace {

// Non-branching chains contracted in rounds. A super-vertex is named by its
// topmost original vertex; its original vertices form a linked list from
// the bottom of the chain to the top.
class ChainContraction {
 public:
  explicit ChainContraction(const RootedTree& t)
      : t_(t),
        up_(t.size(), kNoVertex),
        down_(t.size(), kNoVertex),
        head_(t.size()),
        tail_(t.size()),
        next_(t.size(), kNoVertex) {
    const VertexId n = t.size();
    for (VertexId v = 0; v < n; ++v) {
      if (v != t.root()) up_[v] = t.parent(v);
      if (t.num_children(v) == 1) down_[v] = t.children(v)[0];
      head_[v] = tail_[v] = v;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (non_branching(v) && (has_chain_child(v) || has_chain_parent(v))) active_.push_back(v);
    }
  }

  [[nodiscard]] bool converged() const { return active_.empty(); }

  // Vertices that still have a contractible edge above or below them.
  [[nodiscard]] std::span<const VertexId> active() const { return active_; }

  [[nodiscard]] bool has_chain_child(VertexId v) const {
    return down_[v] != kNoVertex && non_branching(down_[v]);
  }
  [[nodiscard]] bool has_chain_parent(VertexId v) const {
    const VertexId p = up_[v];
    return p != kNoVertex && down_[p] == v && non_branching(p);
  }
  [[nodiscard]] VertexId chain_parent(VertexId v) const { return has_chain_parent(v) ? up_[v] : kNoVertex; }
  [[nodiscard]] VertexId chain_child(VertexId v) const { return has_chain_child(v) ? down_[v] : kNoVertex; }

  // Contracts (p, down(p)) for every selected p. The selected edges must be
  // pairwise vertex-disjoint.
  void contract(std::span<const VertexId> parents) {
    std::vector<VertexId> children(parents.size());
    for (std::size_t i = 0; i < parents.size(); ++i) children[i] = down_[parents[i]];
    par::for_each_index(parents.size(), [&](std::size_t i) {
      const VertexId p = parents[i];
      const VertexId c = children[i];
      const VertexId below = down_[c];
      down_[p] = below;
      if (below != kNoVertex) up_[below] = p;
      next_[tail_[c]] = head_[p];
      head_[p] = head_[c];
      up_[c] = kNoVertex;
      down_[c] = kNoVertex;
    });
    std::vector<char> merged_away(t_.size(), 0);
    for (VertexId c : children) merged_away[c] = 1;
    std::erase_if(active_, [&](VertexId v) {
      return merged_away[v] || !(has_chain_child(v) || has_chain_parent(v));
    });
  }

  // One bough per leaf, read off the list that starts at the leaf.
  [[nodiscard]] std::vector<Bough> boughs() const {
    std::vector<Bough> out;
    for (VertexId v = 0; v < t_.size(); ++v) {
      if (!t_.is_leaf(v)) continue;
      Bough b;
      for (VertexId x = v; x != kNoVertex; x = next_[x]) b.vertices.push_back(x);
      out.push_back(std::move(b));
    }
    return out;
  }

 private:
  [[nodiscard]] bool non_branching(VertexId v) const { return t_.num_children(v) <= 1; }

  const RootedTree& t_;
  std::vector<VertexId> up_;
  std::vector<VertexId> down_;
  std::vector<VertexId> head_;
  std::vector<VertexId> tail_;
  std::vector<VertexId> next_;
  std::vector<VertexId> active_;
};

template <typename Select>
std::vector<Bough> boughs_by_contraction(const RootedTree& t, Select&& select, BoughSearchStats* stats) {
  if (t.size() == 0) return {};
  ChainContraction chains(t);
  int rounds = 0;
  while (!chains.converged()) {
    const std::vector<VertexId> parents = select(chains, rounds);
    chains.contract(parents);
    ++rounds;
  }
  if (stats != nullptr) stats->rounds = rounds;
  return chains.boughs();
}

}  // namespace

std::vector<Bough> find_boughs(const RootedTree& t, Rng& rng, BoughSearchStats* stats) {
  const Rng base(rng());
  auto select = [&](const ChainContraction& chains, int round) {
    const Rng round_rng = base.split(static_cast<std::uint64_t>(round));
    const auto active = chains.active();
    std::vector<char> heads(t.size(), 0);
    par::for_each_index(active.size(), [&](std::size_t i) {
      heads[active[i]] = round_rng.split(static_cast<std::uint64_t>(active[i])).coin() ? 1 : 0;
    });
    // Edge (p, c) joins the set iff p drew heads and c drew tails; two such
    // edges cannot share a vertex.
    std::vector<VertexId> parents;
    for (VertexId p : active) {
      const VertexId c = chains.chain_child(p);
      if (c != kNoVertex && heads[p] && !heads[c]) parents.push_back(p);
    }
    return parents;
  };
  return boughs_by_contraction(t, select, stats);
}

std::vector<Bough> find_boughs_deterministic(const RootedTree& t, BoughSearchStats* stats) {
  auto select = [&](const ChainContraction& chains, int) {
    const auto active = chains.active();
    std::vector<VertexId> predecessor(t.size(), kNoVertex);
    for (VertexId v : active) predecessor[v] = chains.chain_parent(v);
    const auto color = three_coloring(predecessor);
    std::array<std::size_t, 3> count{};
    for (VertexId v : active) {
      if (chains.chain_child(v) != kNoVertex) ++count[color[v]];
    }
    const auto best = static_cast<std::uint8_t>(std::max_element(count.begin(), count.end()) - count.begin());
    std::vector<VertexId> parents;
    for (VertexId v : active) {
      if (color[v] == best && chains.chain_child(v) != kNoVertex) parents.push_back(v);
    }
    return parents;
  };
  return boughs_by_contraction(t, select, stats);
}

std::vector<std::uint8_t> three_coloring(std::span<const VertexId> predecessor) {
  const std::size_t n = predecessor.size();
  std::vector<VertexId> successor(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    if (predecessor[v] != kNoVertex) successor[predecessor[v]] = static_cast<VertexId>(v);
  }

  // Cole-Vishkin: recolor by the lowest bit where a vertex differs from its
  // predecessor, until six colors remain.
  std::vector<std::uint64_t> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = v;
  std::vector<std::uint64_t> next(n);
  auto above_five = [&] { return std::any_of(color.begin(), color.end(), [](std::uint64_t c) { return c >= 6; }); };
  while (above_five()) {
    par::for_each_index(n, [&](std::size_t v) {
      const VertexId p = predecessor[v];
      const std::uint64_t own = color[v];
      const int bit = p == kNoVertex ? 0 : std::countr_zero(own ^ color[p]);
      next[v] = 2 * static_cast<std::uint64_t>(bit) + ((own >> bit) & 1);
    });
    color.swap(next);
  }

  // Drop colors 5, 4, 3: shift down so siblings agree, then recolor the
  // (independent) vertices of the dropped color.
  for (std::uint64_t drop : {5u, 4u, 3u}) {
    par::for_each_index(n, [&](std::size_t v) {
      const VertexId p = predecessor[v];
      next[v] = p != kNoVertex ? color[p] : (color[v] == 0 ? 1 : 0);
    });
    color.swap(next);
    par::for_each_index(n, [&](std::size_t v) {
      if (color[v] != drop) return;
      const VertexId p = predecessor[v];
      const VertexId s = successor[v];
      for (std::uint64_t c = 0; c < 3; ++c) {
        if ((p == kNoVertex || color[p] != c) && (s == kNoVertex || color[s] != c)) {
          color[v] = c;
          break;
        }
      }
    });
  }
  return {color.begin(), color.end()};
}

namespace {

template <typename FindBoughs>
PathDecomposition decompose_with(const RootedTree& t, FindBoughs&& find) {
  PathDecomposition d;
  d.path_of.assign(t.size(), {});
  if (t.size() == 0) return d;

  VertexMask keep(t.size(), true);
  InducedTree current = induced_subtree(t, keep);
  for (int phase = 0;; ++phase) {
    const RootedTree& sub = current.tree;
    std::size_t leaves = 0;
    for (VertexId v = 0; v < sub.size(); ++v) leaves += sub.is_leaf(v) ? 1 : 0;
    d.leaves_per_phase.push_back(leaves);

    BoughSearchStats stats;
    const auto boughs = find(sub, phase, stats);
    d.rounds += stats.rounds;
    for (const Bough& b : boughs) {
      const auto id = static_cast<std::int32_t>(d.paths.size());
      std::vector<VertexId> path;
      path.reserve(b.vertices.size());
      for (auto it = b.vertices.rbegin(); it != b.vertices.rend(); ++it) path.push_back(current.to_outer[*it]);
      for (std::size_t i = 0; i < path.size(); ++i) {
        d.path_of[path[i]] = {id, static_cast<std::int32_t>(i)};
        keep[path[i]] = false;
      }
      d.attach.push_back(path.front() == t.root() ? kNoVertex : t.parent(path.front()));
      d.phase.push_back(phase);
      d.paths.push_back(std::move(path));
    }
    if (!keep[t.root()]) break;
    current = induced_subtree(t, keep);
  }
  return d;
}

}  // namespace

PathDecomposition decompose(const RootedTree& t, Rng& rng) {
  const Rng base(rng());
  return decompose_with(t, [&](const RootedTree& sub, int phase, BoughSearchStats& stats) {
    Rng phase_rng = base.split(static_cast<std::uint64_t>(phase));
    return find_boughs(sub, phase_rng, &stats);
  });
}

PathDecomposition decompose_deterministic(const RootedTree& t) {
  return decompose_with(t, [](const RootedTree& sub, int, BoughSearchStats& stats) {
    return find_boughs_deterministic(sub, &stats);
  });
}

int paths_on_root_path(const RootedTree&, const PathDecomposition& d, VertexId leaf) {
  int count = 0;
  for (VertexId v = leaf; v != kNoVertex; v = d.attach[d.path_of[v].path]) ++count;
  return count;
}

}  // namespace parcut
