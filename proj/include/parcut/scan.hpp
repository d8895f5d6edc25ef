#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <tbb/blocked_range.h>
#include <tbb/parallel_scan.h>

namespace parcut {

inline constexpr std::size_t kScanGrain = 4096;

// Inclusive all-prefix-sums: out[i] = xs[0] + ... + xs[i].
template <typename T>
std::vector<T> all_prefix_sums(std::span<const T> xs) {
  std::vector<T> out(xs.size());
  if (xs.size() <= kScanGrain) {
    T acc{};
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = acc = acc + xs[i];
    return out;
  }
  tbb::parallel_scan(
      tbb::blocked_range<std::size_t>(0, xs.size(), kScanGrain), T{},
      [&](const tbb::blocked_range<std::size_t>& r, T acc, bool final_pass) {
        for (std::size_t i = r.begin(); i != r.end(); ++i) {
          acc = acc + xs[i];
          if (final_pass) out[i] = acc;
        }
        return acc;
      },
      [](const T& a, const T& b) { return a + b; });
  return out;
}

template <typename T>
std::vector<T> all_prefix_sums(const std::vector<T>& xs) {
  return all_prefix_sums(std::span<const T>(xs));
}

// One element of a time-sorted stream: carriers hold a value, receivers
// (value == nullopt) ask for the nearest carrier at or before them.
template <typename T>
struct BroadcastItem {
  std::optional<T> carried;
};

// For every receiver, in stream order, the value of the last carrier that
// precedes it, or fallback if there is none. Implemented as a scan whose
// combine keeps the right operand whenever it holds a carrier.
template <typename T>
std::vector<T> segmented_broadcast(std::span<const BroadcastItem<T>> items, const T& fallback) {
  std::vector<std::size_t> receiver_slot(items.size());
  std::size_t receivers = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    receiver_slot[i] = receivers;
    if (!items[i].carried) ++receivers;
  }
  std::vector<T> out(receivers);

  using State = std::optional<T>;
  auto body = [&](const tbb::blocked_range<std::size_t>& r, State acc, bool final_pass) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      if (items[i].carried) {
        acc = items[i].carried;
      } else if (final_pass) {
        out[receiver_slot[i]] = acc ? *acc : fallback;
      }
    }
    return acc;
  };
  if (items.size() <= kScanGrain) {
    body(tbb::blocked_range<std::size_t>(0, items.size()), State{}, true);
    return out;
  }
  tbb::parallel_scan(tbb::blocked_range<std::size_t>(0, items.size(), kScanGrain), State{}, body,
                     [](const State& left, const State& right) { return right ? right : left; });
  return out;
}

template <typename T>
std::vector<T> segmented_broadcast(const std::vector<BroadcastItem<T>>& items, const T& fallback) {
  return segmented_broadcast(std::span<const BroadcastItem<T>>(items), fallback);
}

}  // namespace parcut
