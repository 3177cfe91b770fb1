#pragma once

#include <stdexcept>
#include <string>

namespace minorlab {

// Bad arguments: out-of-range parameters, malformed input, violated preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact routine was asked to run past its configured size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace minorlab
