#pragma once

#include <stdexcept>
#include <string>

namespace obsvkit {

enum class ErrorCode {
  InvalidMatrix,
  InvalidExponent,
  InvalidBasis,
  InvalidQ,
  SchemaError,
  DomainMismatch,
  MissingFunctional,
  NotObservable,
  NumericalInconsistency,
  RankDeficientRegressor,
  DesignFailure,
  MissingCertificate,
  UnsupportedStructure,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace obsvkit
