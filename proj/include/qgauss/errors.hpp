#pragma once

#include <stdexcept>

namespace qgauss {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModulus : Error { using Error::Error; };
struct InvalidPrime : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct InvalidResidue : Error { using Error::Error; };
struct NonExactDivision : Error { using Error::Error; };
struct NonlinearFit : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

} // namespace qgauss
