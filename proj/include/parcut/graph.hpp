#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;
};

struct Incidence {
  VertexId neighbor;
  Weight weight;
  EdgeId edge;
};

// Undirected multigraph with positive integer weights. Self-loops are dropped
// on construction; parallel edges are kept. Immutable once built.
class Graph {
 public:
  Graph() = default;
  Graph(VertexId n, std::vector<Edge> edges);

  [[nodiscard]] VertexId num_vertices() const { return n_; }
  [[nodiscard]] EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }
  [[nodiscard]] std::span<const Incidence> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] Weight weighted_degree(VertexId v) const { return degree_[v]; }
  [[nodiscard]] Weight total_weight() const { return total_weight_; }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<Weight> degree_;
  Weight total_weight_ = 0;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> tokens;  // index -> external vertex name
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text: one "u v w" per line, '#' starts a comment, blank lines
// ignored. Tokens are remapped to dense ids in order of first appearance.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);

// Sum of weights of edges with exactly one endpoint in side. Throws on an
// empty or full side.
Weight cut_value(const Graph& g, const VertexMask& side);

// Relabels vertices through vertex_map (which must be onto [0, k)), drops
// the resulting self-loops and keeps parallel edges.
Graph contract(const Graph& g, std::span<const VertexId> vertex_map);

// Per-vertex component label in [0, count).
struct Components {
  std::vector<VertexId> label;
  VertexId count = 0;
};
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace parcut
