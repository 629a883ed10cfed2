#include "wavebound/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace wavebound {

int thread_count() {
  int n = omp_get_max_threads();
  if (const char *cap = std::getenv("WAVEBOUND_THREADS")) {
    try {
      const int requested = std::stoi(cap);
      if (requested > 0)
        n = std::min(n, requested);
    } catch (const std::exception &) {
      // ignore malformed values
    }
  }
  return std::max(n, 1);
}

} // namespace wavebound
