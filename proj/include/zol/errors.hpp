#pragma once

#include <stdexcept>
#include <string>

namespace zol {

/// Malformed input: bad indices, inconsistent specs, syntax errors.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (e.g. density of the empty graph).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured ceiling or precondition guard refused the request.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zol
