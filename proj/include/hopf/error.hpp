#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

enum class ErrorCode {
  ConductorMismatch,
  DivisionByZero,
  NotASubfield,
  AmbientMismatch,
  ParseError,
  DimensionMismatch,
  VerificationFailed,
  NotAHopfIdeal,
  NotSurjective,
  NotAnIntegral,
  FieldTooSmall,
  ClaimNotGrouplike,
  ClaimIncomplete,
  ClaimOvercomplete,
  AntipodeOrderExceedsBound,
  NotAHopfMap,
  SectionFails,
  NonTerminatingRewrite,
  NonMonomialConstraint,
  BadParameter,
  WeakActionFails,
  CocycleConditionFails,
  NotQuasitriangular,
  NotRibbon,
  ScaleGateExceeded,
  IoError,
  DimensionGateExceeded,
  IntegralSpaceNotOneDim,
  NotNormalized,
  ExtractionInconsistent,
  NotGrouplike,
  FixtureRejected,
  IdentityFails,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace hopf
