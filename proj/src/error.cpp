#include "conesing/error.hpp"

namespace conesing {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WrongSignature: return "WrongSignature";
    case Errc::InvalidCone: return "InvalidCone";
    case Errc::InvalidSurface: return "InvalidSurface";
    case Errc::BranchNotDivisibleBy2: return "BranchNotDivisibleBy2";
    case Errc::BranchNotAmple: return "BranchNotAmple";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NotBoundedBelow: return "NotBoundedBelow";
    case Errc::NoBoundaryExists: return "NoBoundaryExists";
    case Errc::Config: return "Config";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::Infeasible:
    case Errc::NoBoundaryExists:
      return 3;
    case Errc::NotBoundedBelow:
    case Errc::DivisionByZero:
    case Errc::Internal:
      return 4;
    default:
      return 2;
  }
}

}  // namespace conesing
