#pragma once

#include <stdexcept>
#include <string>

namespace ic {

// Library-level failure with a user-facing message. The CLI maps these to
// exit code 1; anything else escaping main is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented exhaustive-search cap. Separate type so callers
// can tell "too big" from "malformed" and report it as such.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace ic
