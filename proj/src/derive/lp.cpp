#include "tubenum/derive/lp.hpp"

#include <map>
#include <stdexcept>

#include "tubenum/calculus/symbol.hpp"

namespace tubenum {

namespace {

// Solves the square system rows * x = rhs; empty optional if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool satisfied(const LinearConstraint& c, const std::vector<Rational>& x) {
  const Rational v = dot(c.coefficients, x);
  switch (c.kind) {
    case LinearConstraint::Kind::Equal: return v == c.rhs;
    case LinearConstraint::Kind::AtLeast: return v >= c.rhs;
    case LinearConstraint::Kind::AtMost: return v <= c.rhs;
  }
  return false;
}

}  // namespace

LpSolution maximize_over_polytope(const std::vector<Rational>& objective,
                                  const std::vector<LinearConstraint>& constraints) {
  const std::size_t n = objective.size();
  for (const auto& c : constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint width differs from objective");
  }
  LpSolution best;
  const std::size_t m = constraints.size();
  if (m < n) return best;
  // Enumerate n-subsets of constraints as tight sets.
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i : pick) {
      rows.push_back(constraints[i].coefficients);
      rhs.push_back(constraints[i].rhs);
    }
    if (auto x = solve_square(rows, rhs)) {
      bool ok = true;
      for (const auto& c : constraints) ok = ok && satisfied(c, *x);
      if (ok) {
        const Rational v = dot(objective, *x);
        if (!best.feasible || v > best.value) best = {true, v, *x};
      }
    }
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

CombinationResult best_combination(const CombinationSearch& s) {
  const std::size_t k = s.candidates.size();
  std::map<std::string, bool> symbols;
  for (const auto& b : s.candidates) {
    if (b.relation != Relation::UpperApprox || b.quantity != s.candidates.front().quantity) {
      throw std::invalid_argument("combination search needs upper bounds on one quantity");
    }
    for (const auto& [sym, e] : b.rhs.entries()) symbols[sym] = true;
  }
  auto column = [&](const std::string& sym) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = s.candidates[i].rhs.get(sym);
    return row;
  };
  using Kind = LinearConstraint::Kind;
  std::vector<LinearConstraint> cons;
  cons.push_back({std::vector<Rational>(k, Rational(1)), Rational(1), Kind::Equal});
  cons.push_back({column(s.fixed_sym), s.fixed_value, Kind::Equal});
  cons.push_back({column(s.floor_sym), s.floor_value, Kind::AtLeast});
  for (const auto& [sym, unused] : symbols) {
    if (sym == s.objective_sym || sym == s.fixed_sym || sym == s.floor_sym) continue;
    const Domain d = SymbolTable::standard().domain(sym);
    if (d == Domain::Free) throw std::invalid_argument("free symbol '" + sym + "' in combination search");
    cons.push_back({column(sym), Rational(0), d == Domain::AtMostOne ? Kind::AtLeast : Kind::AtMost});
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> unit(k);
    unit[i] = Rational(1);
    cons.push_back({unit, Rational(0), Kind::AtLeast});
  }
  CombinationResult out;
  out.solution = maximize_over_polytope(column(s.objective_sym), cons);
  if (out.solution.feasible) {
    for (std::size_t i = 0; i < k; ++i) out.combined += out.solution.x[i] * s.candidates[i].rhs;
  }
  return out;
}

}  // namespace tubenum
