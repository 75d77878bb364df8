#pragma once

#include <cstdint>

namespace cycloblocks {

// Enumeration limits. Exceeding a cap raises enumeration_limit_error,
// never silent truncation. CYCLOBLOCKS_CAP in the environment overrides
// closure_visits.
struct Caps {
  unsigned partition_n = 30;
  unsigned levi_rank = 16;
  std::uint64_t closure_visits = 100'000'000;
};

const Caps& caps();

}  // namespace cycloblocks
