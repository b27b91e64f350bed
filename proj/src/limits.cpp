#include "alg/limits.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace alg {

namespace {

Limits& storage() {
  static Limits l = [] {
    Limits init;
    if (const char* env = std::getenv("ALG_MAX_CARD")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) init.enumeration_cap = v;
    }
    return init;
  }();
  return l;
}

}  // namespace

const Limits& limits() { return storage(); }

void set_limits(const Limits& l) { storage() = l; }

}  // namespace alg
