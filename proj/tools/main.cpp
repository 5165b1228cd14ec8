#include "commands.hpp"
#include "json_config.hpp"

#include "zbsim/config.hpp"
#include "zbsim/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>
#include <memory>

namespace {

using namespace zbsim::cli;

void add_packet_options(CLI::App* cmd, PacketConfig& cfg) {
  cmd->add_option("--sigma-p", cfg.sigma_p, "momentum width of the Gaussian envelope")->capture_default_str();
  cmd->add_option("--w-plus", cfg.w_plus, "positive-branch weight, 're' or 're,im'")->capture_default_str();
  cmd->add_option("--w-minus", cfg.w_minus, "negative-branch weight, 're' or 're,im'")->capture_default_str();
  cmd->add_option("--m", cfg.m, "effective mass")->capture_default_str();
  cmd->add_option("--c", cfg.c, "effective speed of light")->capture_default_str();
  cmd->add_option("--hbar", cfg.hbar, "reduced Planck constant")->capture_default_str();
  cmd->add_option("--n", cfg.n, "momentum grid points (power of two)")->capture_default_str();
  cmd->add_option("--dp", cfg.dp, "grid spacing, 0 for 20 sigma_p / (n - 1)")->capture_default_str();
  cmd->add_option("--tmax", cfg.tmax, "final time")->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "time samples, 0 for 64 per ZB period")->capture_default_str();
  cmd->add_option("--fd-order", cfg.fd_order, "finite-difference order for <x>")
      ->check(CLI::IsMember({2, 4, 6, 8}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zitterbewegung simulator for the second-quantized free Dirac field"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; command-line flags take precedence");

  CommonConfig common;
  double tol = 0.0;
  app.add_option("--out", common.out, "output directory")->capture_default_str();
  CLI::Option* tol_opt = app.add_option("--tol", tol, "override the pass/fail threshold");

  std::function<int()> action;

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
  verify_cmd->add_option("--suite", verify.suites, "suite to run (repeatable)")
      ->check(CLI::IsMember(zbsim::suite_names()));
  verify_cmd->add_option("--perturb", verify.perturb, "spinor noise amplitude for fault injection");
  verify_cmd->add_flag("--quick", verify.quick, "skip the two-pair Fock space");
  verify_cmd->callback([&] { action = [&] { return run_verify_command(common, verify); }; });

  CoeffConfig coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "pair and classical current coefficients");
  coeff_cmd->add_option("--p", coeff.p, "momentum px,py,pz")->required();
  coeff_cmd->add_option("--m", coeff.m, "mass")->required();
  coeff_cmd->callback([&] { action = [&] { return run_coeff_command(common, coeff); }; });

  FockConfig fock;
  auto* fock_cmd = app.add_subcommand("evolve-fock", "current expectation values in the truncated Fock space");
  fock_cmd->add_option("--p", fock.p, "momentum px,py,pz of the +-p pair")->required();
  fock_cmd->add_option("--extra-p", fock.extra_p, "additional +-q pair (repeatable)");
  fock_cmd->add_option("--m", fock.m, "mass")->required();
  fock_cmd->add_option("--state", fock.state, "vacuum | e:s | f:s | ef:s,s' | pair:s,s'")->capture_default_str();
  fock_cmd->add_option("--tmax", fock.tmax, "final time")->capture_default_str();
  fock_cmd->add_option("--samples", fock.samples, "time samples")->capture_default_str();
  fock_cmd->callback([&] { action = [&] { return run_fock_command(common, fock); }; });

  PacketConfig packet;
  auto* packet_cmd = app.add_subcommand("evolve-packet", "one-dimensional Dirac wave packet");
  packet_cmd->add_option("--p0", packet.p0, "mean momentum")->capture_default_str();
  add_packet_options(packet_cmd, packet);
  packet_cmd->callback([&] { action = [&] { return run_packet_command(common, packet); }; });

  IonMapConfig ion;
  auto* ion_cmd = app.add_subcommand("ion-map", "trapped-ion parameters to Dirac parameters");
  ion_cmd->add_option("--eta", ion.eta, "Lamb-Dicke parameter")->required();
  ion_cmd->add_option("--delta", ion.delta, "trap ground-state width")->required();
  ion_cmd->add_option("--omega-tilde", ion.omega_tilde, "red/blue sideband Rabi frequency")->required();
  ion_cmd->add_option("--omega", ion.omega, "carrier Rabi frequency")->required();
  ion_cmd->add_option("--hbar", ion.hbar, "reduced Planck constant")->capture_default_str();
  ion_cmd->callback([&] { action = [&] { return run_ion_map_command(common, ion); }; });

  SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over mass or packet momentum");
  sweep_cmd->add_option("--kind", sweep.kind, "mass | p0")
      ->check(CLI::IsMember({"mass", "p0"}))
      ->capture_default_str();
  sweep_cmd->add_option("--values", sweep.values, "sweep values")->required()->delimiter(',');
  sweep_cmd->add_option("--p", sweep.p, "momentum for the mass sweep")->capture_default_str();
  add_packet_options(sweep_cmd, sweep.packet);
  sweep_cmd->callback([&] { action = [&] { return run_sweep_command(common, sweep); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  if (tol_opt->count() > 0) {
    if (!(tol > 0.0)) {
      std::fprintf(stderr, "error: --tol must be positive\n");
      return kUsageError;
    }
    common.tol = tol;
  }

  try {
    return action();
  } catch (const zbsim::CapacityError& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return kCapacityError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvariantFailure;
  }
}
