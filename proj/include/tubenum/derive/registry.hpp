#pragma once

#include <map>
#include <string>

#include "tubenum/calculus/bound.hpp"
#include "tubenum/derive/derivation.hpp"

namespace tubenum {

/// Loss bookkeeping for the base estimates. With a fixed two-ends parameter
/// the hairbrush and planebrush estimates carry a delta^-eps factor; when the
/// estimates are applied for every eps at once the loss is polylogarithmic.
enum class Regime { FixedEps, AnyEps };

struct AxiomEntry {
  Bound bound;
  Anchor anchor;
};

struct Registry {
  std::map<std::string, AxiomEntry> axioms;

  std::map<std::string, Bound> bounds() const;
  const Bound& at(const std::string& id) const { return axioms.at(id).bound; }
};

// Axiom ids.
inline constexpr const char* kHairbrush = "hairbrush";
inline constexpr const char* kPlanebrush = "planebrush";
inline constexpr const char* kTrilinear = "trilinear";
inline constexpr const char* kCoarseFineProduct = "coarse_fine_product";
inline constexpr const char* kCoarseFinePlanar = "coarse_fine_planar";
inline constexpr const char* kCountRatio = "count_ratio";

/// The six axioms: hairbrush, planebrush (multiplicity form), trilinear
/// multiplicity, the two coarse/fine multiplicity relations and the count
/// ratio bound.
Registry base_bounds(Regime regime = Regime::FixedEps);

/// Volume lower bound volume >=~ lambda^a delta^(4-d) mass^b.
Bound te_volume(const Rational& d, const Rational& a, const Rational& b, Loss loss = Loss::Sharp);

/// volume_rho >=~ lambda^4/3 rho^2/3 D^-4/3 A^-1/3 mass_rho, the volume form of
/// the planebrush estimate at scale rho.
Bound planebrush_volume_form(Regime regime = Regime::FixedEps);

/// volume >=~ lambda^13/4 delta^3/4 rho mass^1/4, the trilinear volume form.
Bound trilinear_volume_form();

}  // namespace tubenum
