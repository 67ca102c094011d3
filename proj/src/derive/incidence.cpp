#include "tubenum/derive/incidence.hpp"

namespace tubenum {

namespace {

Anchor lemma(std::string note) { return {"multiplicity lemma for m-parallel families", std::move(note)}; }

}  // namespace

std::string add_coarse_relation(DerivationBuilder& b, bool with_checkpoints) {
  b.substitute("hb_at_rho_delta", kHairbrush, "delta", {{"rho", Rational(1)}},
               lemma("hairbrush estimate for the rho-tubes: delta becomes rho"));
  b.substitute("hb_at_rho_m", "hb_at_rho_delta", "m", {{"A", Rational(1)}},
               lemma("rho-tubes are A-parallel"));
  b.substitute("hb_at_rho_mass", "hb_at_rho_m", "mass", {{"mass_rho", Rational(1)}},
               lemma("mass of the rho-tube family"));
  b.rename("hb_at_rho", "hb_at_rho_mass", "mu_rho", lemma("the estimate bounds the coarse multiplicity"));
  b.interpolate("coarse_mu_rho", kPlanebrush, "hb_at_rho", Rational(3, 4),
                lemma("planebrush and rescaled hairbrush, weights 3/4 and 1/4"));
  if (with_checkpoints) {
    b.checkpoint("coarse_mu_rho", {{"lambda", Rational(-7, 16)},
                                   {"rho", Rational(-3, 4)},
                                   {"A", Rational(3, 8)},
                                   {"mass_rho", Rational(1, 8)},
                                   {"D", Rational(1)}});
  }
  b.compose("mu_via_rho", kCoarseFineProduct, "coarse_mu_rho",
            lemma("coarse multiplicity substituted into the product relation"));
  return "mu_via_rho";
}

IncidenceResult derive_lemma_incidence() {
  const Registry reg = base_bounds(Regime::FixedEps);
  DerivationBuilder b("lemma-incidence", reg.bounds());
  const std::string relation = add_coarse_relation(b, true);

  b.substitute("fine_m", kHairbrush, "m", {}, lemma("fine tubes inside a rho-tube are 1-parallel"));
  b.substitute("fine_delta", "fine_m", "delta", {{"delta", Rational(1)}, {"rho", Rational(-1)}},
               lemma("rescale a rho-tube to the unit cube: delta becomes delta/rho"));
  b.substitute("fine_mass", "fine_delta", "mass", {{"mass_ratio", Rational(1)}},
               lemma("mass of the rescaled fine family"));
  b.rename("mu_tilde_hb", "fine_mass", "mu_tilde", lemma("the estimate bounds the fine multiplicity"));
  b.checkpoint("mu_tilde_hb", {{"lambda", Rational(-3, 4)},
                               {"delta", Rational(-1)},
                               {"rho", Rational(1)},
                               {"mass_ratio", Rational(1, 2)}});

  b.compose("route1_raw", relation, "mu_tilde_hb", lemma("fine hairbrush bound substituted"));
  b.substitute("route1_mass", "route1_raw", "mass_rho", {{"mass", Rational(1)}, {"mass_ratio", Rational(-1)}},
               lemma("mass_rho = mass / mass_ratio"));
  b.compose("route1", "route1_mass", kCountRatio, lemma("mass_ratio <= 1/A removes A"));
  b.checkpoint("route1", {{"lambda", Rational(-19, 16)},
                          {"rho", Rational(1, 4)},
                          {"delta", Rational(-1)},
                          {"mass", Rational(1, 8)}});

  b.compose("route2_raw", kCoarseFinePlanar, "mu_tilde_hb", lemma("planar relation with the fine hairbrush bound"));
  b.compose("route2", "route2_raw", kCountRatio, lemma("mass_ratio <= 1/A"));
  b.checkpoint("route2", {{"lambda", Rational(-3, 4)}, {"delta", Rational(-1)}, {"A", Rational(-1, 2)}});

  const Rational w(8, 23);
  b.interpolate("combined_raw", "route1", "route2", w, lemma("routes combined with weights 8/23 and 15/23"));
  b.drop("combined", "combined_raw", "A", lemma("A >= 1 with negative exponent"));
  b.checkpoint("combined", {{"lambda", Rational(-7, 46) + Rational(-3, 4)},
                            {"rho", Rational(2, 23)},
                            {"delta", Rational(-1)},
                            {"mass", Rational(1, 23)}});

  b.eliminate("rho_free", "combined", kTrilinear, "rho",
                                lemma("remove rho against the trilinear estimate"));
  const Rational rho_weight = b.derivation().step("rho_free").params.at("t").get<Rational>();
  if (rho_weight != Rational(23, 25)) {
    throw DerivationMismatch("rho_free", "weight", Rational(23, 25), rho_weight);
  }
  b.checkpoint("rho_free", {{"lambda", Rational(-101, 100)}, {"delta", Rational(-49, 50)}, {"mass", Rational(1, 10)}});

  b.double_count("volume", "rho_free", DoubleCountFrame::unit_scale(), lemma("volume = mu^-1 lambda mass"));
  b.checkpoint("volume", {{"lambda", Rational(201, 100)}, {"delta", Rational(49, 50)}, {"mass", Rational(9, 10)}});
  b.substitute("volume_m", "volume", "mass", {{"mass", Rational(1)}, {"m", Rational(-1)}},
               lemma("m-parallel family as m one-parallel subfamilies of mass mass/m"));
  b.checkpoint("volume_m", {{"m", Rational(-9, 10)},
                            {"lambda", Rational(201, 100)},
                            {"delta", Rational(49, 50)},
                            {"mass", Rational(9, 10)}});

  b.result("combination_weight", w);
  b.result("rho_weight", rho_weight);

  IncidenceResult r;
  r.multiplicity = b.get("rho_free");
  r.volume = b.get("volume");
  r.volume_m_parallel = b.get("volume_m");
  r.combination_weight = w;
  r.rho_weight = rho_weight;
  r.trace = b.take();
  return r;
}

std::pair<Bound, Bound> incidence_routes(const IncidenceResult& r) {
  Bound route2 = drop_bounded(r.trace.step("route2").output, "A", "route2_no_A");
  return {r.trace.step("route1").output, route2};
}

IncidenceLp incidence_lp_certificate(const IncidenceResult& r) {
  auto [route1, route2] = incidence_routes(r);
  CombinationSearch s;
  s.candidates = {route1, route2, base_bounds().at(kTrilinear)};
  s.objective_sym = "delta";
  s.fixed_sym = "mass";
  s.fixed_value = Rational(1, 10);
  s.floor_sym = "lambda";
  s.floor_value = Rational(-101, 100);
  IncidenceLp out;
  out.best = best_combination(s);
  out.replayed_delta_exponent = r.multiplicity.rhs.get("delta");
  out.replayed_is_optimal = out.best.solution.feasible && out.best.solution.value == out.replayed_delta_exponent;
  return out;
}

TrilinearReplay derive_trilinear_corollary() {
  const Registry reg = base_bounds();
  DerivationBuilder b("cor-gz", {});
  b.axiom("trilinear_volume", trilinear_volume_form(), {"trilinear estimate", "volume lower bound"});
  b.double_count("trilinear_mu", "trilinear_volume", DoubleCountFrame::unit_scale(),
                 {"trilinear estimate", "double counting the incidences"});
  b.checkpoint("trilinear_mu", {{"lambda", Rational(-9, 4)},
                                {"rho", Rational(-1)},
                                {"delta", Rational(-3, 4)},
                                {"mass", Rational(3, 4)}});
  TrilinearReplay out;
  out.converted = b.get("trilinear_mu");
  out.matches_axiom = out.converted.same_statement(reg.at(kTrilinear));
  out.trace = b.take();
  return out;
}

}  // namespace tubenum
