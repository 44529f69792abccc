#pragma once

#include <stdexcept>
#include <string>

namespace repring {

// Invalid user-supplied data: malformed group spec, weight outside the
// character lattice, guard exceeded, and so on. Mapped to exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Never expected on valid input; exit code 2.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace repring
