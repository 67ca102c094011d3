#include <iostream>

#include "CLI11.hpp"

#include "tubenum/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace tubenum;
  CLI::App app{"Exact exponent derivations and shaded tube simulations"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit JSON instead of text");
    sub->add_option("--out", flags.out, "Output file (derive, verify, net, fit) or file prefix (sim)");
    sub->add_option("--seed", seed, "Random seed (sim default: config value; verify default: 7; net default: 0)");
  };

  DeriveArgs derive;
  auto* d = app.add_subcommand("derive", "Run an exponent derivation and print its step table");
  d->add_option("name", derive.name,
                "lemma-incidence | restriction-exponent | self-improve | kakeya-iterate | beta-window | cor-gz")
      ->required();
  d->add_option("--alpha", derive.alpha, "Starting exponent for self-improve")->capture_default_str();
  d->add_option("--beta", derive.beta, "Lambda exponent beta for self-improve and beta-window")->capture_default_str();
  d->add_option("--alpha-low", derive.alpha_low, "Lower end of the beta-window interval (default alpha*)");
  d->add_option("--alpha-high", derive.alpha_high, "Upper end of the beta-window interval")->capture_default_str();
  d->add_option("--eps", flags.eps, "Target gap for kakeya-iterate, rational or decimal (default 1e-9)");
  add_common(d);

  SimArgs sim;
  auto* s = app.add_subcommand("sim", "Run a simulation config; writes <out>.json and <out>.csv");
  s->add_option("config", sim.config_path, "Experiment config (JSON)")->required();
  s->add_flag("--scale", sim.scale, "Run every N in N_list and fit the volume exponent");
  add_common(s);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the acceptance suite");
  v->add_option("--only", verify.only, "Restrict to one tag: exponents | sim | determinism");
  add_common(v);

  NetArgs net;
  auto* n = app.add_subcommand("net", "Build a direction net and report its size and separation");
  n->add_option("--dim", net.dim, "Dimension, 3 or 4")->capture_default_str();
  n->add_option("--N", net.N, "Grid size; separation is 1/N")->capture_default_str();
  n->add_option("--budget", net.budget, "Candidates per N^(dim-1)")->capture_default_str();
  n->add_flag("--list", net.list, "Print the directions");
  add_common(n);

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Fit log volume against log delta from a sim CSV");
  f->add_option("csv", fit.csv_path, "CSV written by sim")->required();
  f->add_option("--dim", fit.dim, "Ambient dimension")->capture_default_str();
  add_common(f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (auto* sub : {d, s, v, n, f}) {
    if (sub->parsed() && sub->count("--seed") > 0) flags.seed = seed;
  }

  if (d->parsed()) return cmd_derive(derive, flags, std::cout, std::cerr);
  if (s->parsed()) return cmd_sim(sim, flags, std::cout, std::cerr);
  if (v->parsed()) return cmd_verify(verify, flags, std::cout, std::cerr);
  if (n->parsed()) return cmd_net(net, flags, std::cout, std::cerr);
  return cmd_fit(fit, flags, std::cout, std::cerr);
}
