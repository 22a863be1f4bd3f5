#pragma once

#include <functional>

namespace kdv5 {

/// Worker count: DBU_THREADS when set (clamped to >= 1), else hardware.
int max_threads();

/// Runs fn(i) for i in [0, n) on up to max_threads() workers. Tasks are
/// independent; callers write results by index, so output is identical to
/// the sequential order regardless of thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace kdv5
