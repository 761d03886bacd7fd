#pragma once

// Data-parallel scan kernels. Every kernel has a serial reference path that
// produces the same result (bit-for-bit, for the floating-point reduction) so
// tests can pin the OpenMP path against it and the benchmark can compare them.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qm {

enum class Exec { serial, parallel };

// Smallest index in [0, count) satisfying pred, independent of scheduling.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t count, Pred&& pred, Exec exec) {
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{count};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::uint64_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

// All indices in [0, count) satisfying pred, ascending.
template <class Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t count, Pred&& pred, Exec exec) {
  std::vector<std::uint64_t> out;
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) out.push_back(i);
    }
    return out;
  }
  const int blocks = std::max(1, omp_get_max_threads()) * 8;
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < blocks; ++b) {
    const std::uint64_t lo = count * static_cast<std::uint64_t>(b) / static_cast<std::uint64_t>(blocks);
    const std::uint64_t hi = count * static_cast<std::uint64_t>(b + 1) / static_cast<std::uint64_t>(blocks);
    auto& local = partial[static_cast<std::size_t>(b)];
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (pred(i)) local.push_back(i);
    }
  }
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Fixed-topology pairwise sum; the result depends only on the input order.
inline double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

// row(i) for every i in [0, count), each computed independently.
template <class Row>
std::vector<double> row_values(std::size_t count, Row&& row, Exec exec) {
  std::vector<double> out(count);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = row(i);
    return out;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
  return out;
}

}  // namespace qm
