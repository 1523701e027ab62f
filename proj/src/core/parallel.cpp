#include "weyl/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace weyl {

int configureThreads() {
  if (const char* env = std::getenv("WEYL_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) omp_set_num_threads(cap);
    } catch (const std::exception&) {
      // ignore malformed values, keep the OpenMP default
    }
  }
  return omp_get_max_threads();
}

}  // namespace weyl
