#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcop {

using Int = mpz_class;
using Rat = mpq_class;

// Dominant weight in fundamental-weight coordinates:
// length n-1 for kind A (sl_n), length n for kind C (sp_2n).
using Weight = std::vector<int>;

// A documented uniqueness or consistency claim failed. Catching one of these
// means the computation contradicts a stated property, not bad user input.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An enumeration would exceed the configured memory guard.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Memory guard in bytes, configurable through MCOP_GUARD_MB (default 512 MB).
inline std::size_t guard_limit_bytes() {
  if (const char* s = std::getenv("MCOP_GUARD_MB")) {
    char* end = nullptr;
    unsigned long long mb = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return std::size_t{512} << 20;
}

inline void guard_bytes(std::size_t want, const std::string& what) {
  if (want > guard_limit_bytes())
    throw resource_error(what + " would need about " + std::to_string(want >> 20) +
                         " MB, above the MCOP_GUARD_MB limit");
}

}  // namespace mcop
