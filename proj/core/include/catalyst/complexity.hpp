#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catalyst/instance.hpp"
#include "catalyst/solvers.hpp"

namespace catalyst {

/// Inner linear-system solvers whose query counts are modeled.
enum class SolverModel { hhl, ambainis, cks, subasi, an_lin, lin_tong, costa };

std::string_view to_string(SolverModel model) noexcept;
SolverModel parse_solver_model(std::string_view name);

/// Condition number of (I + eta A)/||I + eta A||: kappa (1 + eta) / (kappa + eta).
double kappa_hat(double kappa, double eta);

/// kappa_hat after choosing eta from the error budget:
/// kappa - (c - 1)(kappa - 1) psi epsilon / (c d). Requires d > eps2.
double kappa_hat_budget(double kappa, double c, double d, double psi, double epsilon);

/// Two-step variant: kappa - (kappa - 1) sqrt((c - 1) psi epsilon / (c d)).
double kappa_hat_two_step(double kappa, double c, double d, double psi, double epsilon);

/// Query count of `model` at (kappa, epsilon) with unit constants.
double solver_queries(SolverModel model, double kappa, double epsilon);

struct CostSplit {
  double improvement = 0.0;
  double overhead = 0.0;
  double total = 0.0;
};

/// Wrapped cost with eps1 = epsilon / c split into the part paid for
/// accuracy and the part paid for the tighter inner tolerance. Costa and CKS
/// only.
CostSplit decompose(double kappa_hat, double c, double epsilon, SolverModel model);

/// Initial distance that halves kappa_hat: 2 (kappa - 1) eps2 / kappa.
double warm_start_d(double kappa, double eps2);

struct ComplexityReport {
  double kappa = 0.0;
  double kappa_hat = 0.0;
  double baseline = 0.0;
  double improvement = 0.0;
  double overhead = 0.0;
  double total = 0.0;
  double eta = 0.0;
  double d = 0.0;
  ErrorBudget budget;
};

/// One wrapped-versus-baseline cost evaluation. Throws invalid_budget when
/// d <= (1 - 1/c) epsilon psi.
ComplexityReport complexity_report(double kappa, double c, double d, double psi, double epsilon,
                                   SolverModel model);

inline constexpr std::string_view kStatusOk = "ok";
inline constexpr std::string_view kStatusInvalidBudget = "invalid-budget";
inline constexpr std::string_view kStatusWarmStartSufficient = "warm-start-sufficient";
inline constexpr std::string_view kStatusQualitative = "qualitative";

/// Sweep row; `report` is empty when the cell was rejected and `status`
/// says why.
struct SweepCell {
  double kappa = 0.0;
  double c = 0.0;
  double d = 0.0;
  double psi = 0.0;
  double epsilon = 0.0;
  double baseline = 0.0;
  std::optional<ComplexityReport> report;
  std::string status;
};

/// Rows follow the order of `c_values`.
std::vector<SweepCell> sweep_c(double kappa, double d, double psi, double epsilon,
                               std::span<const double> c_values, SolverModel model);

/// Wrapped cost as a function of kappa at fixed (c, d, psi, epsilon). Rows
/// carry the `qualitative` status when valid.
std::vector<SweepCell> sweep_kappa(std::span<const double> kappa_values, double c, double d,
                                   double psi, double epsilon, SolverModel model);

struct WarmStartCell {
  int gd_steps = 0;
  SweepCell cell;
};

struct WarmStartConfig {
  std::vector<double> kappa_values;
  std::vector<int> gd_steps;
  double epsilon = 0.1;
  double c = 5.0;
  double psi = 1.0;
  Index n = 100;
  std::uint64_t seed = 1235;
  double gd_stepsize = 1.5;
  SpectrumConvention convention = SpectrumConvention::linear;
  SolverModel model = SolverModel::costa;
};

/// For each kappa, generates one instance, runs gradient descent from 0 for
/// each budget in `gd_steps`, and prices the wrapped solve at the resulting
/// d. Costs use the nominal kappa. Cells with d <= eps2 are reported as
/// `warm-start-sufficient`. Rows are kappa-major in input order.
std::vector<WarmStartCell> warmstart_curve(const WarmStartConfig& config);

}  // namespace catalyst
