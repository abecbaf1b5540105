#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <vector>

namespace chiral::detail {

// Runs fn(i) for every seed index. threads == 1 is a plain loop; otherwise
// seeds are handed out dynamically since their costs differ wildly.
// Returns the exception of the lowest failing seed, if any.
template <class Fn>
std::exception_ptr run_seeds(std::size_t count, int threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    const int t = threads > 0 ? threads : omp_get_max_threads();
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (long long i = 0; i < n; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) return e;
  return nullptr;
}

}  // namespace chiral::detail
