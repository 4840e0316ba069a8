#pragma once

#include <cstddef>
#include <functional>

namespace herglotz {

/// Worker count: HERGLOTZ_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Iterations are independent and each writes
/// only its own output slot, so results do not depend on scheduling. The first
/// exception thrown by any iteration is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace herglotz
