#include "tubenum/derive/registry.hpp"

namespace tubenum {

namespace {

Loss base_loss(Regime regime) { return regime == Regime::FixedEps ? Loss::EpsPower : Loss::PolyLog; }

Bound make(const std::string& quantity, Relation rel, ExponentVector rhs, Loss loss, const std::string& id) {
  Bound b{quantity, rel, std::move(rhs), loss, {id}};
  check_well_formed(b);
  return b;
}

}  // namespace

std::map<std::string, Bound> Registry::bounds() const {
  std::map<std::string, Bound> out;
  for (const auto& [id, entry] : axioms) out.emplace(id, entry.bound);
  return out;
}

Bound te_volume(const Rational& d, const Rational& a, const Rational& b, Loss loss) {
  return make("volume", Relation::LowerApprox, {{"lambda", a}, {"delta", Rational(4) - d}, {"mass", b}}, loss,
              "te_template");
}

Bound planebrush_volume_form(Regime regime) {
  return make("volume_rho", Relation::LowerApprox,
              {{"lambda", Rational(4, 3)},
               {"rho", Rational(2, 3)},
               {"D", Rational(-4, 3)},
               {"A", Rational(-1, 3)},
               {"mass_rho", Rational(1)}},
              base_loss(regime), "planebrush_volume");
}

Bound trilinear_volume_form() {
  return make("volume", Relation::LowerApprox,
              {{"lambda", Rational(13, 4)}, {"delta", Rational(3, 4)}, {"rho", Rational(1)}, {"mass", Rational(1, 4)}},
              Loss::PolyLog, "trilinear_volume");
}

Registry base_bounds(Regime regime) {
  Registry r;
  const Loss loss = base_loss(regime);

  r.axioms[kHairbrush] = {
      make("mu", Relation::UpperApprox,
           {{"m", Rational(1, 2)}, {"lambda", Rational(-3, 4)}, {"delta", Rational(-1)}, {"mass", Rational(1, 2)}},
           loss, kHairbrush),
      {"hairbrush estimate", "multiplicity of a two-ends m-parallel family"}};

  Bound planebrush = double_count(planebrush_volume_form(regime), DoubleCountFrame::rho_scale(), kPlanebrush);
  r.axioms[kPlanebrush] = {planebrush, {"planebrush estimate", "plany rho-tubes, volume form converted to multiplicity"}};

  Bound trilinear = double_count(trilinear_volume_form(), DoubleCountFrame::unit_scale(), kTrilinear);
  r.axioms[kTrilinear] = {trilinear, {"trilinear estimate", "volume form converted to multiplicity"}};

  r.axioms[kCoarseFineProduct] = {
      make("mu", Relation::UpperApprox, {{"mu_rho", Rational(1)}, {"mu_tilde", Rational(1)}, {"D", Rational(-1)}},
           Loss::PolyLog, kCoarseFineProduct),
      {"coarse/fine dichotomy", "multiplicity splits into coarse and fine parts over D"}};

  r.axioms[kCoarseFinePlanar] = {
      make("mu", Relation::UpperApprox, {{"rho", Rational(-1)}, {"mu_tilde", Rational(1)}}, Loss::Sharp,
           kCoarseFinePlanar),
      {"coarse/fine dichotomy", "multiplicity bounded by rho^-1 times the fine multiplicity"}};

  r.axioms[kCountRatio] = {
      make("mass_ratio", Relation::UpperApprox, {{"A", Rational(-1)}}, Loss::Sharp, kCountRatio),
      {"tube counting", "fine mass per rho-tube is at most 1/A"}};
  return r;
}

}  // namespace tubenum
