#include "gcmlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gcm {

int worker_cap() {
  if (const char* env = std::getenv("GCM_LAB_THREADS")) {
    try {
      int v = std::stoi(env);
      return v < 1 ? 1 : v;
    } catch (...) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace gcm
