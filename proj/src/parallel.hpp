#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "mono/execution.hpp"

namespace mono::detail {

/// Runs fn(i) for i in [0, count). In parallel mode the iterations are spread over OpenMP
/// workers; the exception from the lowest failing index is rethrown afterwards, so both modes
/// surface the same error.
template <typename Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mono::detail
