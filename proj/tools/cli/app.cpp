#include "cli/app.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace smhk::cli {

namespace {

void add_params(CLI::App& cmd, RawParams& p, const char* note = nullptr) {
  const std::string suffix = note ? std::string(" ") + note : "";
  cmd.add_option("-n", p.n, "number of sets" + suffix);
  cmd.add_option("-k", p.k, "stars per set" + suffix);
  cmd.add_option("-m", p.m, "path branch length" + suffix);
  cmd.add_option("-L", p.L, "branches per star" + suffix);
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fastest distributed consensus weights on SMHK networks", "smhk"};
  app.require_subcommand(1);

  WeightsOptions weights;
  auto* w = app.add_subcommand("weights", "closed-form optimal weights and SLEM");
  add_params(*w, weights.params);
  w->add_flag("--json", weights.json, "emit JSON");
  w->add_flag("--oracle", weights.oracle, "also run the numerical optimizer");

  SweepOptions nk;
  auto* snk = app.add_subcommand("sweep-nk", "SLEM over a grid of n and k (CSV)");
  add_params(*snk, nk.params, "(only m and L are used)");
  snk->add_option("--grid", nk.grid, "ranges, default n=2..6,k=2..5");
  snk->add_option("--csv", nk.csv_path, "write CSV here instead of stdout");

  SweepOptions ml;
  auto* sml = app.add_subcommand("sweep-ml", "SLEM over a grid of m and L (CSV)");
  add_params(*sml, ml.params, "(only n and k are used)");
  sml->add_option("--grid", ml.grid, "ranges, default m=1..5,L=1..5");
  sml->add_option("--csv", ml.csv_path, "write CSV here instead of stdout");

  SimulateOptions sim;
  auto* s = app.add_subcommand("simulate", "consensus distance trajectories (CSV)");
  add_params(*s, sim.params);
  s->add_option("--weights-file", sim.weights_file, "JSON file with a \"weights\" array");
  s->add_option("--seed", sim.seed, "base RNG seed")->capture_default_str();
  s->add_option("--trials", sim.trials, "number of random starts")->capture_default_str();
  s->add_option("--iters", sim.iterations, "iterations per trial")->capture_default_str();
  s->add_option("--csv", sim.csv_path, "write CSV here instead of stdout");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "invariant checks for one network or a grid");
  add_params(*v, verify.params);
  v->add_option("--grid", verify.grid, "ranges, default n=2..4,k=2..4,m=1..3,L=1..3");
  v->add_flag("--oracle", verify.oracle, "include the numerical optimizer check");
  v->add_option("--perturb-w0", verify.perturb_w0, "add this to the core weight before checking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (w->parsed()) return cmd_weights(weights, out, err);
  if (snk->parsed()) return cmd_sweep_nk(nk, out, err);
  if (sml->parsed()) return cmd_sweep_ml(ml, out, err);
  if (s->parsed()) return cmd_simulate(sim, out, err);
  return cmd_verify(verify, out, err);
}

}  // namespace smhk::cli
