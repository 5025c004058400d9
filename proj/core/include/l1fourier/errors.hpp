#pragma once

#include <stdexcept>
#include <string>

namespace l1f {

/// Invalid parameters or input data that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A quadrature grid cannot resolve the requested frequency, or the request
/// exceeds the desk-scale node budget.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l1f
