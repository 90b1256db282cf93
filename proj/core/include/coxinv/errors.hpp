#pragma once

#include <stdexcept>
#include <string>

namespace coxinv {

/// Malformed or inconsistent input: bad matrices, unknown type names,
/// out-of-range ranks or vertex indices.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was handed an argument outside its mathematical domain,
/// e.g. the Coxeter number of a non-spherical diagram.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A resource guard fired: subset-enumeration budget, rank cap, or the
/// element cap of the brute-force group enumeration.
class LimitExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxinv
