#pragma once

#include <stdexcept>
#include <string>

namespace asymcone {

// Error taxonomy. The CLI maps these onto its exit-code contract:
// input errors -> 2, resource caps -> 3, verification mismatches -> 4.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input / validation errors.
struct ParseError : Error {
  using Error::Error;
};
struct ZeroForm : Error {
  using Error::Error;
};
struct EmptyArrangement : Error {
  using Error::Error;
};
struct NonpositiveMultiplicity : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotAFlat : Error {
  using Error::Error;
};

// Resource caps.
struct FlatCapExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct InstanceTooLarge : Error {
  using Error::Error;
};

// Internal-consistency failures. These never fire on valid input; each one
// signals a bug in the component that raised it.
struct DivisionError : Error {
  using Error::Error;
};
struct InconsistentSystem : Error {
  using Error::Error;
};
struct BadPrime : Error {
  using Error::Error;
};

}  // namespace asymcone
