#pragma once

#include <functional>

namespace htsec {

// Worker cap: min(hardware threads, HT_SECRECY_THREADS when set). At least 1.
int worker_count();

// Runs fn(0..n-1), possibly on several threads. Each index must be an
// independent computation; results must be written to disjoint slots so the
// outcome is schedule-independent.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace htsec
