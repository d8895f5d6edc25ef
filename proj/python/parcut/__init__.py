from ._core import (
    Graph,
    GraphError,
    cut_value,
    minimum_cut,
    parse_graph,
    random_connected_graph,
    stoer_wagner,
)

__all__ = [
    "Graph",
    "GraphError",
    "cut_value",
    "minimum_cut",
    "parse_graph",
    "random_connected_graph",
    "stoer_wagner",
]
