#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace catalyst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

struct GenOptions {
  long n = 100;
  double kappa = 500.0;
  std::uint64_t seed = 1235;
  std::string spectrum = "linear";
};

struct SweepCOptions {
  double kappa = 20.0;
  double d = 1.0;
  double psi = 10.0;
  double epsilon = 0.1;
  std::vector<double> c = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
  std::string model = "costa";
};

struct SweepKappaOptions {
  std::vector<double> kappa = {100, 200, 300, 400, 500};
  double c = 5.0;
  double d = 1.0;
  double psi = 1.0;
  double epsilon = 0.1;
  std::string model = "costa";
};

struct WarmStartOptions {
  std::vector<double> kappa = {100, 200, 300, 400, 500};
  std::vector<int> gd_steps = {200, 500, 1000};
  double epsilon = 0.1;
  double c = 5.0;
  double psi = 1.0;
  long n = 100;
  std::uint64_t seed = 1235;
  double gd_stepsize = 1.5;
  std::string spectrum = "linear";
  std::string model = "costa";
};

struct SimulateOptions {
  long n = 100;
  double kappa = 100.0;
  std::uint64_t seed = 1;
  int runs = 1;
  double epsilon = 0.1;
  double c = 5.0;
  std::string psi_mode = "fixed";
  double psi = 1.0;
  int psi_max_iter = 50;
  double psi_tol = 1e-10;
  std::string solver = "inexact";
  std::string x0 = "zero";
  std::string spectrum = "linear";
};

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: all
  std::uint64_t seed = 20240607;
  double perturb_kappa_hat = 1.0;
};

// Each command writes its primary output to `out`. Library precondition
// failures propagate as catalyst::Error; the caller maps them to exit 2.
int cmd_gen(const GenOptions& opts, std::ostream& out);
int cmd_sweep_c(const SweepCOptions& opts, std::ostream& out);
int cmd_sweep_kappa(const SweepKappaOptions& opts, std::ostream& out);
int cmd_warmstart(const WarmStartOptions& opts, std::ostream& out);
int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& summary);
int cmd_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace catalyst::cli
