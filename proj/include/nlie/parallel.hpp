#pragma once

// Deterministic "first failing index" search.
//
// Checkers sweep a finite, totally ordered family of cases and must report the
// smallest failing case regardless of how the sweep is scheduled. The parallel
// kernel only skips cases whose index exceeds a failure that is already known,
// so the minimum failing index is always evaluated and the result matches the
// serial reference exactly.

#include <atomic>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nlie/exact.hpp"

namespace nlie {

template <class T>
struct Hit {
  std::size_t index;
  T value;
};

/// probe(i) returns std::optional<T>; a value means case i fails.
template <class T, class Probe>
std::optional<Hit<T>> first_hit_serial(std::size_t count, Probe&& probe) {
  for (std::size_t i = 0; i < count; ++i) {
    if (std::optional<T> v = probe(i)) return Hit<T>{i, std::move(*v)};
  }
  return std::nullopt;
}

template <class T, class Probe>
std::optional<Hit<T>> first_hit_parallel(std::size_t count, Probe&& probe) {
  std::atomic<std::size_t> best{count};
  std::vector<std::optional<T>> found(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (std::optional<T> v = probe(i)) {
      found[i] = std::move(v);
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t i = best.load();
  if (i == count) return std::nullopt;
  return Hit<T>{i, std::move(*found[i])};
}

template <class T, class Probe>
std::optional<Hit<T>> first_hit(std::size_t count, Probe&& probe, Exec exec) {
  if (exec == Exec::parallel) return first_hit_parallel<T>(count, std::forward<Probe>(probe));
  return first_hit_serial<T>(count, std::forward<Probe>(probe));
}

}  // namespace nlie
