#pragma once

#include "tubenum/derive/derivation.hpp"
#include "tubenum/derive/lp.hpp"
#include "tubenum/derive/registry.hpp"

namespace tubenum {

/// Adds the steps shared by the incidence and self-improvement chains:
/// rescale the hairbrush estimate to rho-tubes, combine with planebrush at
/// weight 3/4, and substitute into the coarse/fine product relation. Returns
/// the id of mu <=~ lambda^-7/16 rho^-3/4 A^3/8 mass_rho^1/8 mu_tilde.
std::string add_coarse_relation(DerivationBuilder& b, bool with_checkpoints);

struct IncidenceResult {
  Bound multiplicity;          // mu <=~ lambda^-101/100 delta^-49/50 mass^1/10
  Bound volume;                // volume >=~ lambda^201/100 delta^49/50 mass^9/10
  Bound volume_m_parallel;     // ... times m^-9/10
  Rational combination_weight;  // 8/23
  Rational rho_weight;          // 23/25
  Derivation trace;
};

/// Replays the multiplicity estimate for m-parallel two-ends families step by
/// step. Throws DerivationMismatch at the first exponent that differs from the
/// asserted checkpoints.
IncidenceResult derive_lemma_incidence();

/// mu <=~ lambda^-19/16 rho^1/4 delta^-1 mass^1/8 and
/// mu <=~ lambda^-3/4 delta^-1 (A dropped), the two routes that get combined.
std::pair<Bound, Bound> incidence_routes(const IncidenceResult& r);

struct IncidenceLp {
  CombinationResult best;
  Rational replayed_delta_exponent;  // exponent reached by the replayed chain
  bool replayed_is_optimal = false;
};

/// Maximizes the delta exponent over convex combinations of the two routes
/// and the trilinear estimate, with mass exponent 1/10 and lambda exponent at
/// least -101/100.
IncidenceLp incidence_lp_certificate(const IncidenceResult& r);

/// Trilinear volume form converted to a multiplicity bound, compared with the
/// registered axiom.
struct TrilinearReplay {
  Bound converted;
  bool matches_axiom = false;
  Derivation trace;
};
TrilinearReplay derive_trilinear_corollary();

}  // namespace tubenum
