#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ddmac::cli;
  CLI::App app{"Binary doubly-dirty MAC laboratory"};
  app.require_subcommand(1);

  RegionArgs region;
  auto* region_cmd = app.add_subcommand("region", "Capacity vs best single-letter sum rate over a q grid (CSV)");
  region_cmd->add_option("--q-min", region.q_min, "Lower end of the q grid")->capture_default_str();
  region_cmd->add_option("--q-max", region.q_max, "Upper end of the q grid")->capture_default_str();
  region_cmd->add_option("--steps", region.steps, "Number of q points")->capture_default_str();
  region_cmd->add_option("--grid", region.grid, "F_max grid points per alpha axis")->capture_default_str();
  region_cmd->add_option("--out", region.out, "CSV output path")->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo run of the coset scheme (JSON)");
  sim_cmd->add_option("--code", sim.code, "Code file, or builtin hamming7 / golay23")->capture_default_str();
  sim_cmd->add_option("--q1", sim.q1, "Input constraint of user 1")->capture_default_str();
  sim_cmd->add_option("--q2", sim.q2, "Input constraint of user 2")->capture_default_str();
  sim_cmd->add_option("--l1", sim.l1, "Syndrome bits carried by user 1 (default n-k)");
  sim_cmd->add_option("--l2", sim.l2, "Syndrome bits carried by user 2 (default 0)");
  sim_cmd->add_option("--trials", sim.trials, "Number of blocks")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "JSON output path (stdout if omitted)");

  KmdemoArgs km;
  auto* km_cmd = app.add_subcommand("kmdemo", "Modulo-two sum source coding demo (CSV)");
  km_cmd->add_option("--theta", km.theta, "Crossover probability; repeat for several rows")->capture_default_str();
  km_cmd->add_option("--code", km.code, "Code file, or builtin hamming7 / golay23")->capture_default_str();
  km_cmd->add_option("--trials", km.trials, "Blocks per theta")->capture_default_str();
  km_cmd->add_option("--seed", km.seed, "RNG seed")->capture_default_str();
  km_cmd->add_option("--out", km.out, "CSV output path")->required();

  GaussianArgs gauss;
  auto* gauss_cmd = app.add_subcommand("gaussian", "Mod-Delta sum-rate estimate vs high-SNR capacity (JSON)");
  gauss_cmd->add_option("config", gauss.config, "Config JSON (P1, P2, N, Q1, Q2, samples, seed, bootstrap)");
  gauss_cmd->add_option("--seed", gauss.seed, "Override the config seed");
  gauss_cmd->add_option("--calibration-samples", gauss.calibration_samples, "Unit-Gaussian calibration draws")
      ->capture_default_str();
  gauss_cmd->add_option("--out", gauss.out, "JSON output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  return run_guarded(
      [&]() -> int {
        if (*region_cmd) return cmd_region(region, std::cerr);
        if (*sim_cmd) return cmd_simulate(sim, std::cout, std::cerr);
        if (*km_cmd) return cmd_kmdemo(km, std::cerr);
        return cmd_gaussian(gauss, std::cout, std::cerr);
      },
      std::cerr);
}
