#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parcut {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Cut values and path weights are exact integers. kInfinity masks a vertex
// for the duration of one bough walk; it is added and later subtracted, so
// it must stay finite. Padding leaves sit strictly above any masked weight.
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr Weight kMaxTotalWeight = Weight{1} << 40;
inline constexpr Weight kInfinity = Weight{1} << 60;
inline constexpr Weight kPadding = Weight{1} << 61;

constexpr bool is_masked(Weight w) { return w >= kInfinity / 2; }

// Membership bitset over the vertex range.
using VertexMask = std::vector<bool>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is disconnected") {}
};

}  // namespace parcut
