#pragma once

#include <stdexcept>
#include <string>

namespace fockcanon {

// Raised when the engine detects that its sign/exponent/ordering conventions
// do not produce a genuine quantum-group action or crystal. Never a user error.
class ConventionFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Laurent polynomial division that should have been exact was not.
class InexactDivision : public ConventionFault {
 public:
  using ConventionFault::ConventionFault;
};

// Reduction needed G^nu for a non-Kleshchev nu, or two columns needed each other.
class TriangularityViolation : public ConventionFault {
 public:
  using ConventionFault::ConventionFault;
};

// A computed invariant (defect, dimension) came out negative or non-integral.
class ConsistencyError : public ConventionFault {
 public:
  using ConventionFault::ConventionFault;
};

}  // namespace fockcanon
