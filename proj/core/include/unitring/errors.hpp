#pragma once

#include <stdexcept>
#include <string>

namespace unitring {

// Input outside the mathematical domain of an operation (zero divisor,
// even order where odd is required, and so on).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A desk-scale guard was exceeded (degree cap, 128-bit order, enumeration
// dimension).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed caller input: unparsable text, mismatched field contexts.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace unitring
