#pragma once

#include <stdexcept>

namespace mzv {

// Malformed input or an unsupported configuration. The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate or structural invariant failed to hold. The CLI maps it to exit code 3.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzv
