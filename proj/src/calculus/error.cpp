#include "tubenum/calculus/error.hpp"

namespace tubenum {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::DirectionUnsound: return "DirectionUnsound";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::Parse: return "Parse";
  }
  return "?";
}

CalculusError::CalculusError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace tubenum
