#include "parcut/stoer_wagner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace parcut {

MinCut stoer_wagner(const Graph& g) {
  const VertexId n = g.num_vertices();
  if (n < 2) throw GraphError("minimum cut needs at least 2 vertices");

  if (const Components comp = connected_components(g); comp.count > 1) {
    MinCut cut;
    cut.side.assign(n, false);
    for (VertexId v = 0; v < n; ++v) cut.side[v] = comp.label[v] == 0;
    return cut;
  }

  // Super-vertices: representative via union-find, member lists as linked lists.
  std::vector<VertexId> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](VertexId x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  std::vector<VertexId> next_member(n, kNoVertex);
  std::vector<VertexId> tail(n);
  std::iota(tail.begin(), tail.end(), 0);

  std::vector<std::vector<std::pair<VertexId, Weight>>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const Incidence& inc : g.neighbors(v)) adj[v].emplace_back(inc.neighbor, inc.weight);
  }

  std::vector<VertexId> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<Weight> key(n, 0);
  std::vector<char> added(n, 0);

  MinCut best;
  best.value = std::numeric_limits<Weight>::max();
  std::vector<VertexId> best_members;

  while (active.size() > 1) {
    for (VertexId v : active) {
      key[v] = 0;
      added[v] = 0;
    }
    std::priority_queue<std::pair<Weight, VertexId>> heap;
    for (VertexId v : active) heap.emplace(0, -v);  // smaller id first on ties

    VertexId prev = kNoVertex;
    VertexId last = kNoVertex;
    std::size_t taken = 0;
    while (taken < active.size()) {
      const auto [k, neg] = heap.top();
      heap.pop();
      const VertexId v = -neg;
      if (added[v] || k != key[v]) continue;
      added[v] = 1;
      ++taken;
      prev = last;
      last = v;
      for (auto& [x, w] : adj[v]) {
        const VertexId y = find(x);
        if (y == v || added[y]) continue;
        key[y] += w;
        heap.emplace(key[y], -y);
      }
    }

    if (key[last] < best.value) {
      best.value = key[last];
      best_members.clear();
      for (VertexId m = last; m != kNoVertex; m = next_member[m]) best_members.push_back(m);
    }

    // Merge last into prev.
    rep[last] = prev;
    next_member[tail[prev]] = last;
    tail[prev] = tail[last];
    auto& into = adj[prev];
    into.insert(into.end(), adj[last].begin(), adj[last].end());
    adj[last].clear();
    adj[last].shrink_to_fit();
    for (auto& [x, w] : into) x = find(x);
    std::sort(into.begin(), into.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < into.size(); ++i) {
      if (into[i].first == prev) continue;
      if (out > 0 && into[out - 1].first == into[i].first) {
        into[out - 1].second += into[i].second;
      } else {
        into[out++] = into[i];
      }
    }
    into.resize(out);
    active.erase(std::find(active.begin(), active.end(), last));
  }

  best.side.assign(n, false);
  for (VertexId m : best_members) best.side[m] = true;
  return best;
}

}  // namespace parcut
