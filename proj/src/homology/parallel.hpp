#pragma once

// Runs fn(d) for every degree in [lo, hi]. The parallel path spreads degrees
// over OpenMP threads; the serial path is the reference the tests and the
// benchmark compare it against. Callers write results into per-degree slots,
// so both paths produce identical output. If several degrees throw, the
// exception of the lowest degree wins, as it would serially.

#include <exception>
#include <vector>

#include "golodkit/homology/resolution.hpp"

namespace golodkit::detail {

template <class Fn>
void for_each_degree(int lo, int hi, Execution ex, Fn&& fn) {
  if (hi < lo) return;
  if (ex == Execution::serial) {
    for (int d = lo; d <= hi; ++d) fn(d);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (int d = lo; d <= hi; ++d) {
    try {
      fn(d);
    } catch (...) {
      errors[d - lo] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace golodkit::detail
