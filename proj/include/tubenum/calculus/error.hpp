#pragma once

#include <stdexcept>
#include <string>

namespace tubenum {

enum class ErrorKind {
  ContractViolation,
  NoSolution,
  WeightOutOfRange,
  DirectionUnsound,
  UnknownSymbol,
  Parse,
};

const char* to_string(ErrorKind kind);

class CalculusError : public std::runtime_error {
 public:
  CalculusError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tubenum
