#include "parcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace parcut {

Graph::Graph(VertexId n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw GraphError("edge endpoint out of range");
    if (e.w <= 0) throw GraphError("edge weight must be positive");
    if (e.u == e.v) continue;
    total_weight_ += e.w;
    if (total_weight_ > kMaxTotalWeight) throw GraphError("total edge weight exceeds 2^40");
    edges_.push_back(e);
  }

  degree_.assign(n, 0);
  std::vector<std::size_t> count(n + 1, 0);
  for (const Edge& e : edges_) {
    ++count[e.u + 1];
    ++count[e.v + 1];
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  offsets_ = count;
  adjacency_.resize(2 * edges_.size());
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[count[e.u]++] = {e.v, e.w, id};
    adjacency_[count[e.v]++] = {e.u, e.w, id};
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  ParsedGraph out;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  auto id_of = [&](std::string_view token) {
    auto [it, inserted] = index.try_emplace(std::string(token), static_cast<VertexId>(out.tokens.size()));
    if (inserted) out.tokens.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    if (fields.size() != 3) throw ParseError(line_no, "expected \"u v w\"");
    Weight w = 0;
    const auto* end = fields[2].data() + fields[2].size();
    const auto [ptr, ec] = std::from_chars(fields[2].data(), end, w);
    if (ec != std::errc() || ptr != end) throw ParseError(line_no, "weight is not an integer");
    if (w <= 0) throw ParseError(line_no, "non-positive weight");
    const VertexId u = id_of(fields[0]);
    const VertexId v = id_of(fields[1]);
    edges.push_back({u, v, w});
  }

  if (out.tokens.size() < 2) throw ParseError(line_no, "graph needs at least 2 vertices");
  out.graph = Graph(static_cast<VertexId>(out.tokens.size()), std::move(edges));
  return out;
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Weight cut_value(const Graph& g, const VertexMask& side) {
  if (side.size() != static_cast<std::size_t>(g.num_vertices())) throw GraphError("side has wrong size");
  const auto members = std::count(side.begin(), side.end(), true);
  if (members == 0 || members == g.num_vertices()) throw GraphError("cut side must be nonempty and proper");
  Weight value = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) value += e.w;
  }
  return value;
}

Graph contract(const Graph& g, std::span<const VertexId> vertex_map) {
  if (vertex_map.size() != static_cast<std::size_t>(g.num_vertices())) throw GraphError("vertex map has wrong size");
  VertexId k = 0;
  for (VertexId x : vertex_map) {
    if (x < 0) throw GraphError("vertex map entry is negative");
    k = std::max(k, x + 1);
  }
  std::vector<bool> hit(k, false);
  for (VertexId x : vertex_map) hit[x] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw GraphError("vertex map is not onto");

  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const VertexId u = vertex_map[e.u];
    const VertexId v = vertex_map[e.v];
    if (u != v) edges.push_back({u, v, e.w});
  }
  return Graph(k, std::move(edges));
}

Components connected_components(const Graph& g) {
  Components c;
  c.label.assign(g.num_vertices(), kNoVertex);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (c.label[s] != kNoVertex) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (c.label[inc.neighbor] == kNoVertex) {
          c.label[inc.neighbor] = c.count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++c.count;
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

}  // namespace parcut
