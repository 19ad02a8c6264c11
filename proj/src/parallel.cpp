#include "prymlab/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace prymlab {

int worker_count() {
  if (const char* env = std::getenv("PRYM_LAB_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace prymlab
