#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bisa {

// Invalid parameter or out-of-domain input. The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem or I/O failure. The CLI maps this to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

inline void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (value <= 0.0) {
    throw DomainError(std::string(name) + " must be positive");
  }
}

inline void require_non_negative(double value, const char* name) {
  require_finite(value, name);
  if (value < 0.0) {
    throw DomainError(std::string(name) + " must be non-negative");
  }
}

}  // namespace detail
}  // namespace bisa
