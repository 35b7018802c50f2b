#pragma once

#include <stdexcept>

namespace infoconc {

// An argument fell outside the admissible range of an operation: alpha past
// the MGF domain, beta <= n, a point outside the support, and so on.
// Kept distinct from SolverError so callers can tell bad input apart from a
// numerical failure.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical routine did not converge (quadrature refinement exhausted,
// root bracket could not be established, ...).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infoconc
