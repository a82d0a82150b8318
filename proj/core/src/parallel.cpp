#include "filiform/parallel.hpp"

#include <cstdlib>
#include <string>

namespace filiform {

int thread_budget() {
  int budget = 0;
  if (const char* env = std::getenv("FILIFORM_THREADS")) {
    try {
      budget = std::stoi(env);
    } catch (...) {
      budget = 0;
    }
  }
  if (budget <= 0) budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget <= 0) budget = 1;
  return budget;
}

}  // namespace filiform
