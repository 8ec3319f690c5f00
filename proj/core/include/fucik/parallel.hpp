#pragma once

#include <functional>

namespace fucik {

// Process caps worker parallelism; 0 restores the hardware default.
void set_max_threads(int n);
int max_threads();

// Runs fn(0..n-1) on up to max_threads() workers. Results must be written to
// per-index slots by the caller; index order of any later reduction is then
// independent of scheduling, which keeps solver output bit-stable across
// thread counts. The first exception thrown by any item is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace fucik
