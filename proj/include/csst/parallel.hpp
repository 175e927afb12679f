#pragma once

#include <cstddef>
#include <functional>

namespace csst {

/// Worker count from CSST_WORKERS, falling back to the hardware concurrency.
unsigned default_workers();

/// Runs fn(task, worker) for every task in [0, tasks). Tasks are claimed
/// dynamically; callers must merge per-task results in task order.
void parallel_for(std::size_t tasks, unsigned workers, const std::function<void(std::size_t, unsigned)>& fn);

}  // namespace csst
