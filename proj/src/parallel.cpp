#include "acdaa/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace acdaa {
namespace {

std::atomic<int> g_override{0};

int default_threads() {
  if (const char* env = std::getenv("ACDAA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int thread_count() {
  const int forced = g_override.load(std::memory_order_relaxed);
  return forced > 0 ? forced : default_threads();
}

void set_thread_count(int threads) { g_override.store(threads > 0 ? threads : 0); }

}  // namespace acdaa
