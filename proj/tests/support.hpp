#pragma once

#include <initializer_list>
#include <string>

#include "parcut/graph.hpp"

namespace testing_support {

inline parcut::ParsedGraph fig1() {
  return parcut::parse_graph(
      "G C 3\nA G 3\nA C 2\nQ A 1\nC P 1\nQ P 1\nQ E 1\nP E 2\n");
}

inline parcut::VertexId id_of(const parcut::ParsedGraph& p, const std::string& token) {
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.tokens[i] == token) return static_cast<parcut::VertexId>(i);
  }
  return parcut::kNoVertex;
}

inline parcut::VertexMask side_of(const parcut::ParsedGraph& p, std::initializer_list<const char*> tokens) {
  parcut::VertexMask side(p.graph.num_vertices(), false);
  for (const char* t : tokens) side[id_of(p, t)] = true;
  return side;
}

}  // namespace testing_support

#include "parcut/tree.hpp"

namespace testing_support {

// Ten-vertex tree with four boughs:
// r=0, w0=1, w1=2, w4=3, w6=4, w5=5, w7=6, w8=7, w9=8, w3=9.
inline parcut::RootedTree bough_tree() {
  return parcut::RootedTree::from_parents({0, 0, 1, 2, 3, 1, 5, 5, 7, 1}, 0);
}

inline parcut::RootedTree path_tree(parcut::VertexId n) {
  std::vector<parcut::VertexId> parent(n);
  for (parcut::VertexId v = 0; v < n; ++v) parent[v] = v == 0 ? 0 : v - 1;
  return parcut::RootedTree::from_parents(std::move(parent), 0);
}

inline parcut::RootedTree star_tree(parcut::VertexId leaves) {
  return parcut::RootedTree::from_parents(std::vector<parcut::VertexId>(leaves + 1, 0), 0);
}

// Heap-shaped tree with n = 2^levels - 1 vertices.
inline parcut::RootedTree complete_binary_tree(int levels) {
  const parcut::VertexId n = (parcut::VertexId{1} << levels) - 1;
  std::vector<parcut::VertexId> parent(n);
  for (parcut::VertexId v = 0; v < n; ++v) parent[v] = v == 0 ? 0 : (v - 1) / 2;
  return parcut::RootedTree::from_parents(std::move(parent), 0);
}

}  // namespace testing_support
