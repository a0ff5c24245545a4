#pragma once

#include <stdexcept>
#include <string>

namespace abgold {

// Raised for malformed inputs: out-of-range arguments, odd targets, tables
// too small for the requested query. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace abgold
