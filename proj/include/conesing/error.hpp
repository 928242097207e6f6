#pragma once

#include <stdexcept>
#include <string>

namespace conesing {

enum class Errc {
  MixedFields,
  DivisionByZero,
  DimensionMismatch,
  WrongSignature,
  InvalidCone,
  InvalidSurface,
  BranchNotDivisibleBy2,
  BranchNotAmple,
  InvalidArgument,
  Infeasible,
  NotBoundedBelow,
  NoBoundaryExists,
  Config,
  Internal,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Process exit status for the command line front end: 2 input/validation,
// 3 mathematical infeasibility, 4 internal assertion.
int exit_code_for(Errc code) noexcept;

}  // namespace conesing
