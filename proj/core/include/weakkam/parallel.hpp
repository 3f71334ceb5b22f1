#pragma once

#include <cstddef>
#include <functional>

namespace weakkam {

// Worker count: hardware concurrency capped by the WEAKKAM_THREADS
// environment variable (values < 1 are ignored).
std::size_t worker_count();

// Runs body(i) for i in [0, count) on up to worker_count() threads.
// Iterations must write disjoint state.  Exceptions from a worker are
// rethrown on the calling thread (first one wins).
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace weakkam
