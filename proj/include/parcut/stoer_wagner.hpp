#pragma once

#include "parcut/graph.hpp"

namespace parcut {

struct MinCut {
  Weight value = 0;
  VertexMask side;
};

// Exact global minimum cut by maximum-adjacency search. A disconnected graph
// yields value 0 with one connected component as the side. Requires n >= 2.
MinCut stoer_wagner(const Graph& g);

}  // namespace parcut
