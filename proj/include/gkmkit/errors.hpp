#pragma once

#include <stdexcept>
#include <string>

namespace gkmkit {

// Violation of a mathematical precondition or invariant (zero weight, dangling
// endpoint, non-reduced word, ...). The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document or unreadable file. The CLI maps these to exit code 1.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkmkit
