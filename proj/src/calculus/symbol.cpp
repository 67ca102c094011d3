#include "tubenum/calculus/symbol.hpp"

#include "tubenum/calculus/error.hpp"

namespace tubenum {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::AtMostOne: return "AtMostOne";
    case Domain::AtLeastOne: return "AtLeastOne";
    case Domain::Free: return "Free";
  }
  return "?";
}

void SymbolTable::add(const std::string& name, Domain domain) {
  auto [it, inserted] = entries_.emplace(name, domain);
  if (!inserted && it->second != domain) {
    throw CalculusError(ErrorKind::ContractViolation,
                        "symbol '" + name + "' already registered with domain " + to_string(it->second));
  }
}

bool SymbolTable::contains(const std::string& name) const { return entries_.count(name) != 0; }

Domain SymbolTable::domain(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw CalculusError(ErrorKind::UnknownSymbol, "'" + name + "'");
  return it->second;
}

std::vector<Symbol> SymbolTable::symbols() const {
  std::vector<Symbol> out;
  for (const auto& [name, domain] : entries_) out.push_back({name, domain});
  return out;
}

const SymbolTable& SymbolTable::standard() {
  static const SymbolTable table = [] {
    SymbolTable t;
    for (const char* s : {"lambda", "delta", "rho", "mass", "mass_rho", "mass_ratio"}) t.add(s, Domain::AtMostOne);
    for (const char* s : {"A", "m", "D", "h", "R"}) t.add(s, Domain::AtLeastOne);
    for (const char* s : {"mu", "mu_tilde", "mu_rho", "volume", "volume_rho", "normalized_integral"}) {
      t.add(s, Domain::Free);
    }
    return t;
  }();
  return table;
}

}  // namespace tubenum
