#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zbsim::cli {

enum ExitCode : int { kOk = 0, kInvariantFailure = 1, kUsageError = 2, kCapacityError = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonConfig {
  std::string out = ".";
  std::optional<double> tol;
};

struct VerifyConfig {
  std::vector<std::string> suites;
  double perturb = 0.0;
  bool quick = false;
};

struct CoeffConfig {
  std::string p;
  double m = 0.0;
};

struct FockConfig {
  std::string p;
  std::vector<std::string> extra_p;
  double m = 0.0;
  std::string state = "pair:-1/2,+1/2";
  double tmax = 5.0;
  std::size_t samples = 512;
};

struct PacketConfig {
  double p0 = 0.0;
  double sigma_p = 0.05;
  std::string w_plus = "0.7071067811865476";
  std::string w_minus = "0.7071067811865476";
  double m = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  std::size_t n = 4096;
  double dp = 0.0;
  double tmax = 20.0;
  std::size_t samples = 0;  // 0: 64 per expected ZB period
  int fd_order = 8;
};

struct IonMapConfig {
  double eta = 0.0;
  double delta = 0.0;
  double omega_tilde = 0.0;
  double omega = 0.0;
  double hbar = 1.0;
};

struct SweepConfig {
  std::string kind = "mass";  // mass | p0
  std::vector<double> values;
  std::string p = "0,0,3";     // mass sweep momentum
  PacketConfig packet;         // p0 sweep parameters
};

int run_verify_command(const CommonConfig& common, const VerifyConfig& cfg);
int run_coeff_command(const CommonConfig& common, const CoeffConfig& cfg);
int run_fock_command(const CommonConfig& common, const FockConfig& cfg);
int run_packet_command(const CommonConfig& common, const PacketConfig& cfg);
int run_ion_map_command(const CommonConfig& common, const IonMapConfig& cfg);
int run_sweep_command(const CommonConfig& common, const SweepConfig& cfg);

}  // namespace zbsim::cli
