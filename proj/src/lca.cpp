#include "parcut/lca.hpp"

namespace parcut {

namespace {

std::vector<std::pair<int, VertexId>> euler_tour(const RootedTree& t, std::vector<std::size_t>& index) {
  std::vector<std::pair<int, VertexId>> tour;
  tour.reserve(2 * static_cast<std::size_t>(t.size()));
  index.assign(t.size(), 0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{t.root(), 0}};
  index[t.root()] = 0;
  tour.emplace_back(0, t.root());
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = t.children(v);
    if (next < kids.size()) {
      const VertexId c = kids[next++];
      index[c] = tour.size();
      tour.emplace_back(t.depth(c), c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour.emplace_back(t.depth(stack.back().first), stack.back().first);
    }
  }
  return tour;
}

}  // namespace

LcaIndex::LcaIndex(const RootedTree& tree) : table_(euler_tour(tree, tour_index_)) {}

VertexId LcaIndex::lca(VertexId a, VertexId b) const {
  auto i = tour_index_[a];
  auto j = tour_index_[b];
  if (i > j) std::swap(i, j);
  return table_.query(i, j + 1).second;
}

}  // namespace parcut
