#include "catalyst/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catalyst/errors.hpp"

namespace catalyst {
namespace {

void require_rhs(const SymMatrix& m, const Vector& v) {
  require(v.size() == m.dim(), ErrorKind::invalid_input,
          "right-hand side length does not match matrix dimension");
  require(v.allFinite() && v.norm() > 0.0, ErrorKind::invalid_input,
          "right-hand side must be finite and nonzero");
}

// Worst-case |p_t(x) - 1/x| over [1/kappa, 1]; attained at x = 1/kappa.
double truncation_error(double kappa, int t) {
  return kappa * std::pow(1.0 - 1.0 / kappa, t);
}

}  // namespace

ErrorBudget split_budget(double epsilon, double c, double psi) {
  require(std::isfinite(epsilon) && epsilon > 0.0, ErrorKind::invalid_input,
          "epsilon must be positive");
  require(std::isfinite(psi) && psi > 0.0, ErrorKind::invalid_input, "psi must be positive");
  require(c > 1.0, ErrorKind::invalid_split,
          "split constant c must exceed 1 (got " + std::to_string(c) + ")");
  return ErrorBudget{epsilon, c, epsilon / c, (1.0 - 1.0 / c) * epsilon * psi, psi};
}

int cks_degree(double kappa, double eps) {
  require(std::isfinite(kappa) && kappa >= 1.0, ErrorKind::invalid_input, "kappa must be >= 1");
  require(eps > 0.0 && eps < kappa, ErrorKind::invalid_input,
          "need 0 < eps < kappa for a positive degree bound");
  const double bound = std::ceil(kappa * std::log(kappa / eps));
  return bound < 1.0 ? 1 : static_cast<int>(bound);
}

std::vector<double> truncated_inverse_coeffs(int t) {
  require(t >= 1, ErrorKind::invalid_input, "polynomial length t must be >= 1");
  return std::vector<double>(static_cast<std::size_t>(t), 1.0);
}

SolverOutcome inexact_qlsp(const SymMatrix& m, const Vector& v, double eps1) {
  require(eps1 > 0.0, ErrorKind::invalid_input, "eps1 must be positive");
  require(eps1 < 0.5, ErrorKind::hypothesis_violation,
          "operator error must stay below 1/2 (got eps1 = " + std::to_string(eps1) + ")");
  require_rhs(m, v);
  const Vector& ev = m.spectrum().eigenvalues;
  require(ev[0] > 0.0, ErrorKind::not_positive_definite, "matrix must be positive-definite");
  require(ev[ev.size() - 1] <= 1.0 + 1e-12, ErrorKind::invalid_input,
          "matrix norm must not exceed 1");

  // The polynomial must be accurate on [lambda_min, 1], i.e. for an effective
  // condition number 1/lambda_min (equal to cond(M) when ||M|| = 1).
  const double kappa = std::max(1.0, 1.0 / ev[0]);
  int t = cks_degree(kappa, eps1);
  while (truncation_error(kappa, t) > eps1) ++t;

  const std::vector<double> coeffs = truncated_inverse_coeffs(t);
  Vector out = apply_poly(m, coeffs, v);
  out /= out.norm();
  return SolverOutcome{std::move(out), 4.0 * eps1, t};
}

SolverOutcome exact_qlsp(const SymMatrix& m, const Vector& v) {
  require_rhs(m, v);
  Vector out = solve_spd(m, v);
  out /= out.norm();
  return SolverOutcome{std::move(out), 0.0, 0};
}

CatalystResult catalyst_solve(const LinearSystemInstance& inst, const Vector& x0, double epsilon,
                              double c, const CatalystOptions& options) {
  require(x0.size() == inst.a.dim(), ErrorKind::invalid_input,
          "x0 length does not match the instance dimension");
  require(std::isfinite(options.rhs_scale) && options.rhs_scale > 0.0, ErrorKind::invalid_input,
          "rhs_scale must be positive");
  const double d = (x0 - inst.x_star).norm();

  double psi = 1.0;
  int psi_iterations = 0;
  if (const auto* fixed = std::get_if<PsiFixed>(&options.psi_mode)) {
    psi = fixed->value;
  } else {
    const auto& fp = std::get<PsiFixedPoint>(options.psi_mode);
    require(fp.max_iter >= 1 && fp.tol > 0.0, ErrorKind::invalid_input,
            "fixed-point psi needs max_iter >= 1 and tol > 0");
    bool converged = false;
    while (psi_iterations < fp.max_iter) {
      ++psi_iterations;
      const ErrorBudget trial = split_budget(epsilon, c, psi);
      const double eta = select_eta(inst.kappa, d, trial.eps2);
      const double next = compute_psi(inst, x0, eta);
      const double change = std::abs(next - psi);
      psi = next;
      if (change <= fp.tol) {
        converged = true;
        break;
      }
    }
    require(converged, ErrorKind::non_convergence,
            "psi fixed point did not settle within " + std::to_string(fp.max_iter) +
                " iterations");
  }

  const ErrorBudget budget = split_budget(epsilon, c, psi);
  const double eta = select_eta(inst.kappa, d, budget.eps2);
  SymMatrix modified = normalized_proximal_matrix(inst.a, eta);
  Vector rhs = options.rhs_scale * (x0 + eta * inst.b);

  SolverOutcome outcome = options.solver == SolverKind::exact
                              ? exact_qlsp(modified, rhs)
                              : inexact_qlsp(modified, rhs, budget.eps1);
  return CatalystResult{std::move(outcome), PpaPlan{eta, 1, x0, d}, budget,
                        std::move(modified), std::move(rhs), psi_iterations};
}

ErrorDecomposition measure_errors(const LinearSystemInstance& inst, const CatalystResult& result) {
  const Vector exact_step = exact_qlsp(result.modified, result.rhs).state;
  const Vector target = solve_spd(inst.a, inst.b);
  return ErrorDecomposition{
      normalized_state_distance(result.outcome.state, exact_step),
      normalized_state_distance(exact_step, target),
      normalized_state_distance(result.outcome.state, target),
  };
}

}  // namespace catalyst
