#include "cycloblocks/caps.hpp"

#include <cstdlib>
#include <string>

namespace cycloblocks {

const Caps& caps() {
  static const Caps c = [] {
    Caps caps;
    if (const char* env = std::getenv("CYCLOBLOCKS_CAP")) {
      try {
        caps.closure_visits = std::stoull(env);
      } catch (const std::exception&) {
        // leave the default in place on unparseable input
      }
    }
    return caps;
  }();
  return c;
}

}  // namespace cycloblocks
