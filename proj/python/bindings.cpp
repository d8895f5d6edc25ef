#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parcut/driver.hpp"
#include "parcut/graph.hpp"
#include "parcut/random_graph.hpp"
#include "parcut/stoer_wagner.hpp"

namespace py = pybind11;
using namespace parcut;

namespace {

std::vector<Edge> to_edges(const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, w] : edges) out.push_back({u, v, w});
  return out;
}

std::vector<VertexId> members(const VertexMask& side) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel minimum cut";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](VertexId n, const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges) {
             return Graph(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("total_weight", &Graph::total_weight)
      .def("edges", [](const Graph& g) {
        std::vector<std::tuple<VertexId, VertexId, Weight>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
        return out;
      })
      .def("weighted_degree", &Graph::weighted_degree);

  m.def("parse_graph", [](const std::string& text) {
    auto p = parse_graph(text);
    return py::make_tuple(std::move(p.graph), std::move(p.tokens));
  }, py::arg("text"), "Parse an edge list; returns (graph, tokens).");

  m.def("cut_value", [](const Graph& g, const std::vector<VertexId>& side) {
    VertexMask mask(g.num_vertices(), false);
    for (VertexId v : side) {
      if (v < 0 || v >= g.num_vertices()) throw py::index_error("vertex out of range");
      mask[v] = true;
    }
    return cut_value(g, mask);
  }, py::arg("graph"), py::arg("side"));

  m.def("stoer_wagner", [](const Graph& g) {
    const auto cut = stoer_wagner(g);
    return py::make_tuple(cut.value, members(cut.side));
  }, py::arg("graph"), "Exact minimum cut; returns (value, side).");

  m.def("random_connected_graph", [](VertexId n, std::int64_t extra, Weight max_weight, std::uint64_t seed) {
    Rng rng(seed);
    return random_connected_graph(n, extra, max_weight, rng);
  }, py::arg("n"), py::arg("extra"), py::arg("max_weight") = 10, py::arg("seed") = 0);

  m.def("minimum_cut",
        [](const Graph& g, std::uint64_t seed, int threads, int trees, double epsilon, int retries, bool oracle) {
          RunConfig cfg;
          cfg.seed = seed;
          cfg.threads = threads;
          cfg.packing.tree_count = trees;
          cfg.packing.epsilon = epsilon;
          cfg.retries = retries;
          cfg.oracle_check = oracle;
          RunReport r;
          {
            py::gil_scoped_release release;
            r = minimum_cut(g, cfg);
          }
          py::dict out;
          out["value"] = r.value;
          out["side"] = members(r.side);
          out["trees_tried"] = r.trees_tried;
          py::dict work;
          work["packing_probes"] = r.work.packing_probes;
          work["mst_calls"] = r.work.mst_calls;
          work["tree_ops"] = r.work.tree_ops;
          work["prefix_ops"] = r.work.prefix_ops;
          work["node_work"] = r.work.node_work;
          work["max_phases"] = r.work.max_phases;
          out["work"] = work;
          out["oracle_agreement"] = r.oracle_agreement ? py::cast(*r.oracle_agreement) : py::none();
          return out;
        },
        py::arg("graph"), py::arg("seed") = 0, py::arg("threads") = 0, py::arg("trees") = 0,
        py::arg("epsilon") = 0.2, py::arg("retries") = 0, py::arg("oracle") = false);
}
