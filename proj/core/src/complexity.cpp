#include "catalyst/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catalyst/errors.hpp"
#include "catalyst/ppa.hpp"

namespace catalyst {
namespace {

void require_kappa(double kappa) {
  require(std::isfinite(kappa) && kappa >= 1.0, ErrorKind::invalid_input,
          "kappa must be >= 1 (got " + std::to_string(kappa) + ")");
}

// (c - 1) psi epsilon / c, i.e. eps2 of the budget, after argument checks.
double budget_eps2(double c, double d, double psi, double epsilon) {
  require(c > 1.0, ErrorKind::invalid_budget, "c must exceed 1");
  require(psi > 0.0 && epsilon > 0.0, ErrorKind::invalid_budget,
          "psi and epsilon must be positive");
  require(std::isfinite(d) && d > 0.0, ErrorKind::invalid_budget, "d must be positive");
  return (c - 1.0) * psi * epsilon / c;
}

}  // namespace

std::string_view to_string(SolverModel model) noexcept {
  switch (model) {
    case SolverModel::hhl: return "hhl";
    case SolverModel::ambainis: return "ambainis";
    case SolverModel::cks: return "cks";
    case SolverModel::subasi: return "subasi";
    case SolverModel::an_lin: return "anlin";
    case SolverModel::lin_tong: return "lintong";
    case SolverModel::costa: return "costa";
  }
  return "unknown";
}

SolverModel parse_solver_model(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  lower.erase(std::remove_if(lower.begin(), lower.end(),
                             [](char ch) { return ch == '-' || ch == '_'; }),
              lower.end());
  for (SolverModel m : {SolverModel::hhl, SolverModel::ambainis, SolverModel::cks,
                        SolverModel::subasi, SolverModel::an_lin, SolverModel::lin_tong,
                        SolverModel::costa}) {
    if (lower == to_string(m)) return m;
  }
  fail(ErrorKind::unknown_model, "unknown solver model '" + std::string(name) + "'");
}

double kappa_hat(double kappa, double eta) {
  require_kappa(kappa);
  require(eta >= 0.0, ErrorKind::invalid_input, "eta must be >= 0");
  if (std::isinf(eta)) return kappa;
  return kappa * (1.0 + eta) / (kappa + eta);
}

double kappa_hat_budget(double kappa, double c, double d, double psi, double epsilon) {
  require_kappa(kappa);
  const double eps2 = budget_eps2(c, d, psi, epsilon);
  require(d > eps2, ErrorKind::invalid_budget,
          "d = " + std::to_string(d) + " does not exceed eps2 = " + std::to_string(eps2) +
              "; the step size would be non-positive");
  return kappa - (c - 1.0) * (kappa - 1.0) * psi * epsilon / (c * d);
}

double kappa_hat_two_step(double kappa, double c, double d, double psi, double epsilon) {
  require_kappa(kappa);
  const double radicand = budget_eps2(c, d, psi, epsilon) / d;
  require(radicand > 0.0 && radicand <= 1.0, ErrorKind::invalid_budget,
          "two-step radicand must lie in (0, 1] (got " + std::to_string(radicand) + ")");
  return kappa - (kappa - 1.0) * std::sqrt(radicand);
}

double solver_queries(SolverModel model, double kappa, double epsilon) {
  require_kappa(kappa);
  require(epsilon > 0.0 && epsilon < 1.0, ErrorKind::invalid_input,
          "epsilon must lie in (0, 1)");
  switch (model) {
    case SolverModel::hhl: return kappa * kappa / epsilon;
    case SolverModel::ambainis: return kappa * std::pow(std::log(kappa), 3) / std::pow(epsilon, 3);
    case SolverModel::cks: return kappa * std::log10(kappa / epsilon);
    case SolverModel::subasi: return kappa * std::log(kappa) / epsilon;
    case SolverModel::an_lin: return kappa * std::log10(kappa / epsilon);
    case SolverModel::lin_tong: return kappa * std::log10(kappa / epsilon);
    case SolverModel::costa: return kappa * std::log10(1.0 / epsilon);
  }
  fail(ErrorKind::unknown_model, "unknown solver model");
}

CostSplit decompose(double kappa_hat, double c, double epsilon, SolverModel model) {
  require(c > 1.0, ErrorKind::invalid_input, "c must exceed 1");
  require(epsilon > 0.0, ErrorKind::invalid_input, "epsilon must be positive");
  require(kappa_hat >= 1.0, ErrorKind::invalid_input, "kappa_hat must be >= 1");
  switch (model) {
    case SolverModel::costa:
      return CostSplit{kappa_hat * std::log10(1.0 / epsilon), kappa_hat * std::log10(c),
                       kappa_hat * std::log10(c / epsilon)};
    case SolverModel::cks:
      return CostSplit{kappa_hat * std::log10(kappa_hat / epsilon), kappa_hat * std::log10(c),
                       kappa_hat * std::log10(kappa_hat * c / epsilon)};
    default:
      fail(ErrorKind::unsupported_model,
           "cost decomposition is defined for costa and cks only (got " +
               std::string(to_string(model)) + ")");
  }
}

double warm_start_d(double kappa, double eps2) {
  require(kappa > 1.0, ErrorKind::invalid_input, "kappa must exceed 1");
  require(eps2 > 0.0, ErrorKind::invalid_input, "eps2 must be positive");
  return 2.0 * (kappa - 1.0) * eps2 / kappa;
}

ComplexityReport complexity_report(double kappa, double c, double d, double psi, double epsilon,
                                   SolverModel model) {
  const double hat = kappa_hat_budget(kappa, c, d, psi, epsilon);
  const ErrorBudget budget = split_budget(epsilon, c, psi);
  const CostSplit split = decompose(hat, c, epsilon, model);
  return ComplexityReport{kappa,
                          hat,
                          solver_queries(model, kappa, epsilon),
                          split.improvement,
                          split.overhead,
                          split.total,
                          select_eta(kappa, d, budget.eps2),
                          d,
                          budget};
}

namespace {

SweepCell evaluate_cell(double kappa, double c, double d, double psi, double epsilon,
                        SolverModel model, std::string_view invalid_status) {
  SweepCell cell{kappa, c, d, psi, epsilon, solver_queries(model, kappa, epsilon), {}, {}};
  try {
    cell.report = complexity_report(kappa, c, d, psi, epsilon, model);
    cell.status = kStatusOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_budget && e.kind() != ErrorKind::degenerate_target &&
        e.kind() != ErrorKind::invalid_split) {
      throw;
    }
    cell.status = invalid_status;
  }
  return cell;
}

}  // namespace

std::vector<SweepCell> sweep_c(double kappa, double d, double psi, double epsilon,
                               std::span<const double> c_values, SolverModel model) {
  std::vector<SweepCell> rows;
  rows.reserve(c_values.size());
  for (double c : c_values) {
    rows.push_back(evaluate_cell(kappa, c, d, psi, epsilon, model, kStatusInvalidBudget));
  }
  return rows;
}

std::vector<SweepCell> sweep_kappa(std::span<const double> kappa_values, double c, double d,
                                   double psi, double epsilon, SolverModel model) {
  std::vector<SweepCell> rows;
  rows.reserve(kappa_values.size());
  for (double kappa : kappa_values) {
    SweepCell cell = evaluate_cell(kappa, c, d, psi, epsilon, model, kStatusInvalidBudget);
    if (cell.report) cell.status = kStatusQualitative;
    rows.push_back(std::move(cell));
  }
  return rows;
}

std::vector<WarmStartCell> warmstart_curve(const WarmStartConfig& config) {
  for (int steps : config.gd_steps) {
    require(steps >= 0, ErrorKind::invalid_input, "gradient-descent budgets must be >= 0");
  }
  std::vector<WarmStartCell> rows;
  if (config.gd_steps.empty()) return rows;
  rows.reserve(config.kappa_values.size() * config.gd_steps.size());
  for (double kappa : config.kappa_values) {
    const LinearSystemInstance inst = generate(config.n, kappa, config.seed, config.convention);
    // Every budget starts from x0 = 0, so one run of the longest budget
    // yields all the distances.
    const int longest = *std::max_element(config.gd_steps.begin(), config.gd_steps.end());
    const GdResult gd = gd_warm_start(inst, Vector::Zero(config.n), config.gd_stepsize, longest);
    for (int steps : config.gd_steps) {
      const double d = gd.errors[static_cast<std::size_t>(steps)];
      rows.push_back(WarmStartCell{
          steps, evaluate_cell(kappa, config.c, d, config.psi, config.epsilon, config.model,
                               kStatusWarmStartSufficient)});
    }
  }
  return rows;
}

}  // namespace catalyst
