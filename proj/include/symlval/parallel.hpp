#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace symlval {

// Worker count used by the parallel maps below. Defaults to the value of
// SYMLVAL_THREADS when set, otherwise 1.
unsigned thread_count();
void set_thread_count(unsigned n);

// Calls body(i) for every i in [0, n). Work is handed out in index order to
// `thread_count()` workers; body must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Pairwise (tree) summation. The association order depends only on the
// length of the input, so results are reproducible for any thread count.
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.empty()) return T{};
  if (values.size() <= 8) {
    T s = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) s += values[i];
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

}  // namespace symlval
