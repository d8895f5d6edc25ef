#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace parcut {

// Idempotent range query over a static array. O(n log n) build, O(1) query.
template <typename T, typename Op>
class SparseTable {
 public:
  SparseTable() = default;
  explicit SparseTable(std::vector<T> values, Op op = Op{}) : op_(op) {
    const auto n = values.size();
    const int levels = n == 0 ? 0 : std::bit_width(n);
    table_.resize(levels);
    if (levels == 0) return;
    table_[0] = std::move(values);
    for (int k = 1; k < levels; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::size_t count = n - (std::size_t{1} << k) + 1;
      table_[k].resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        table_[k][i] = op_(table_[k - 1][i], table_[k - 1][i + half]);
      }
    }
  }

  // [first, last), first < last.
  [[nodiscard]] T query(std::size_t first, std::size_t last) const {
    const int k = std::bit_width(last - first) - 1;
    return op_(table_[k][first], table_[k][last - (std::size_t{1} << k)]);
  }

 private:
  Op op_{};
  std::vector<std::vector<T>> table_;
};

}  // namespace parcut
