#ifndef ECSS_ERRORS_HPP
#define ECSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecss {

// Bad input: malformed parameters, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but exceeds an exhaustive-computation limit.
class ScaleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ecss

#endif  // ECSS_ERRORS_HPP
