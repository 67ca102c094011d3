#include "tubenum/sim/stats.hpp"

#include <algorithm>
#include <limits>

namespace tubenum {

std::vector<std::uint32_t> multiplicity(const ShadedFamily& family) {
  std::vector<std::uint32_t> mult(family.spec.cell_count(), 0);
  for (const auto& st : family.tubes) {
    for (std::uint16_t pos : st.shading) ++mult[st.tube.cells[pos]];
  }
  return mult;
}

IncidenceStats compute_stats(const ShadedFamily& family, const std::vector<std::uint32_t>& mult) {
  IncidenceStats s;
  s.dim = family.spec.dim;
  s.N = family.spec.N;
  s.tube_count = family.tubes.size();

  // lambda = (1/#T) sum |Y(T)|/|T|, grouped by |T| to keep denominators small
  std::map<std::size_t, std::uint64_t> shaded_by_length;
  s.min_tube_cells = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total_cells = 0;
  for (const auto& st : family.tubes) {
    const std::size_t len = st.tube.cells.size();
    shaded_by_length[len] += st.shading.size();
    s.tube_incidences += st.shading.size();
    total_cells += len;
    s.min_tube_cells = std::min<std::uint64_t>(s.min_tube_cells, len);
    s.max_tube_cells = std::max<std::uint64_t>(s.max_tube_cells, len);
  }
  if (s.tube_count == 0) s.min_tube_cells = 0;
  Rational lambda_sum;
  for (const auto& [len, shaded] : shaded_by_length) {
    lambda_sum += Rational(mpz_class(static_cast<unsigned long>(shaded)), mpz_class(static_cast<unsigned long>(len)));
  }

  for (std::uint32_t m : mult) {
    if (m == 0) continue;
    ++s.shaded_cells;
    s.cell_incidences += m;
    s.max_multiplicity = std::max(s.max_multiplicity, m);
    ++s.histogram[m];
  }

  const mpz_class cells_total(static_cast<unsigned long>(family.spec.cell_count()));
  const auto u = [](std::uint64_t x) { return mpz_class(static_cast<unsigned long>(x)); };
  s.volume = Rational(u(s.shaded_cells), cells_total);
  if (s.tube_count > 0) {
    s.lambda = lambda_sum / Rational(u(s.tube_count), mpz_class(1));
    s.mean_tube_cells = static_cast<double>(total_cells) / static_cast<double>(s.tube_count);
  }
  if (s.shaded_cells > 0) s.mu = Rational(u(s.cell_incidences), u(s.shaded_cells));
  mpz_class slab = 1;
  for (int i = 0; i + 1 < s.dim; ++i) slab *= s.N;
  s.mass = Rational(u(s.tube_count), slab);
  return s;
}

IncidenceStats compute_stats(const ShadedFamily& family) { return compute_stats(family, multiplicity(family)); }

}  // namespace tubenum
