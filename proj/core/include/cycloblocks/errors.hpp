#pragma once

#include <stdexcept>
#include <string>

namespace cycloblocks {

// An enumeration would exceed its configured cap.
struct enumeration_limit_error : std::runtime_error {
  explicit enumeration_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal cross-check failed; signals a bug, never expected input.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace cycloblocks
