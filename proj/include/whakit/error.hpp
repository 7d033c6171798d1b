#pragma once

#include <stdexcept>
#include <string>

namespace whakit {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  SyntaxError,
  ExponentOutOfRange,
  DimensionMismatch,
  NotIdempotent,
  IdempotentFailure,
  Uncertified,
  ComultiplicationEscapesCarrier,
  CoactionEscapesCarrier,
  AntipodeNotInvertible,
  XiNotBijective,
  InverseConstructionFailed,
  ZeroParameter,
  BlockDecompositionFailed,
  GeneratorNotFound,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace whakit
