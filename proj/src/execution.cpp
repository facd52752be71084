#include "mono/execution.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace mono {

void apply_thread_limit_from_env() {
  const char* env = std::getenv("MONO_THREADS");
  if (env == nullptr || *env == '\0') return;
  try {
    const int n = std::stoi(env);
    if (n >= 1) omp_set_num_threads(n);
  } catch (const std::exception&) {
    // ignore malformed values
  }
}

int worker_count() {
  apply_thread_limit_from_env();
  return omp_get_max_threads();
}

}  // namespace mono
