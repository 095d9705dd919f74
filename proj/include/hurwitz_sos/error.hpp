#pragma once

#include <stdexcept>
#include <string>

namespace hsos {

// Bad arguments: empty words, r outside [0, p], malformed letters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate or ansatz whose shape is inconsistent (dimensions, degree,
// letter counts, non-Hermitian Gram matrices).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric routine was handed a matrix that is not (numerically) PSD/Hermitian.
class NotPsdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsos
