#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tubenum {

/// Range a positive parameter is known to lie in. Determines which factors can
/// be discarded from a one-sided bound.
enum class Domain { AtMostOne, AtLeastOne, Free };

const char* to_string(Domain d);

struct Symbol {
  std::string name;
  Domain domain = Domain::Free;
};

/// Registry of named parameters. Registration is append-only; re-registering a
/// name with a different domain is rejected.
class SymbolTable {
 public:
  void add(const std::string& name, Domain domain);
  bool contains(const std::string& name) const;
  Domain domain(const std::string& name) const;  // throws UnknownSymbol
  std::vector<Symbol> symbols() const;

  /// lambda, delta, rho, the mass symbols, A, m, D, h, R and the quantity names
  /// used by the derivations.
  static const SymbolTable& standard();

 private:
  std::map<std::string, Domain> entries_;
};

}  // namespace tubenum
