#pragma once

#include <stdexcept>
#include <string>

namespace heckepairs {

// Bad caller input. The CLI maps this to exit code 1.
class invalid_argument : public std::invalid_argument {
 public:
  explicit invalid_argument(const std::string& what) : std::invalid_argument(what) {}
};

// An internal cross-check failed (arithmetic bug, violated invariant).
// The CLI maps this to exit code 2.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace heckepairs
