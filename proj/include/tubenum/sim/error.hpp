#pragma once

#include <stdexcept>
#include <string>

namespace tubenum {

enum class SimErrorKind { InvalidConfig, Infeasible, EmptyTube };

class SimError : public std::runtime_error {
 public:
  SimError(SimErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  SimErrorKind kind() const { return kind_; }

 private:
  SimErrorKind kind_;
};

}  // namespace tubenum
