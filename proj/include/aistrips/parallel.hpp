#pragma once

#include <cstddef>
#include <functional>

namespace ais {

// Run fn(i) for i in [0, n) on up to n_threads workers. Tasks are handed out
// by atomic counter; every task writes only its own output slot, so results
// are deterministic regardless of scheduling. n_threads <= 1 runs inline.
void parallel_for(std::size_t n, int n_threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace ais
