#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#include "nttlab/poly_mul.hpp"

namespace nttlab::detail {

/// Runs body(i) for i in [0, count), on an OpenMP team when exec is Parallel.
/// Exceptions cannot cross the parallel region, so the first one is stored
/// and rethrown after the loop joins.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel && count > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace nttlab::detail
