#pragma once

#include <stdexcept>
#include <string>

namespace cuspidal {

// Invalid input parameters (negative degrees, non-coprime cusps, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Cusp configuration whose delta invariants do not add up to the genus.
class GenusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index outside the admissible range (e.g. a Spin^c label m).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Enumeration exceeded the configured candidate cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form identity that must hold failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cuspidal
