#pragma once

#include <stdexcept>
#include <string>

namespace gdh {

// Input outside the mathematical domain of an operation (bad indices, bare
// jets that have no normal form, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lower-weight table entry was required but never built.
class MissingTable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A truncated series is too shallow for the requested check.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A stored object violates one of its structural invariants.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gdh
