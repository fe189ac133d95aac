#pragma once

// Minimal fork-join helper.  Work items are independent; callers write
// results into preallocated slots indexed by the item number and reduce in
// index order afterwards, so the outcome does not depend on scheduling.

#include <functional>

namespace localsyn {

// LOCALSYN_THREADS if set (clamped to >= 1), else hardware concurrency
int thread_budget();

void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace localsyn
