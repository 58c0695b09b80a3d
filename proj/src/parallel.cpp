#include "srg12/parallel.hpp"

#include <cstdlib>
#include <string>

namespace srg12 {

unsigned default_worker_count() {
  if (const char* env = std::getenv("SRG12_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace srg12
