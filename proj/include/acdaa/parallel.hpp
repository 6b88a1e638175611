#pragma once

namespace acdaa {

// Worker threads for the OpenMP kernels: ACDAA_THREADS if set to a positive
// integer, otherwise the OpenMP default. Always >= 1.
int thread_count();

// Overrides thread_count() for the current process; 0 restores the default.
void set_thread_count(int threads);

}  // namespace acdaa
