#include "kmroot/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kmroot {

int effective_threads() {
#ifdef _OPENMP
  int t = omp_get_max_threads();
  if (const char* env = std::getenv("KMROOT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) t = std::min(t, cap);
    } catch (...) {
      // Unparseable value: ignore and keep the OpenMP default.
    }
  }
  return std::max(1, t);
#else
  return 1;
#endif
}

}  // namespace kmroot
