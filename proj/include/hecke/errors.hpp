#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Pole at the requested evaluation point (eps = 0, or a numeric q).
struct NotRegular : Error {
  using Error::Error;
};

// Baxterized factor with x^{-1} y = 1.
struct SingularFactor : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// An internal identity that must hold did not.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace hecke
