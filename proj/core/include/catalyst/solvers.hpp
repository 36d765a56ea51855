#pragma once

#include <variant>
#include <vector>

#include "catalyst/instance.hpp"
#include "catalyst/linalg.hpp"
#include "catalyst/ppa.hpp"

namespace catalyst {

/// Split of the target accuracy epsilon between the inner solver
/// (eps1 = epsilon / c) and the proximal step (eps2 = (1 - 1/c) epsilon psi),
/// so that eps1 + eps2 / psi = epsilon.
struct ErrorBudget {
  double epsilon = 0.0;
  double c = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double psi = 0.0;
};

ErrorBudget split_budget(double epsilon, double c, double psi);

/// Output of a linear-system subroutine: the unit-norm state, its a-priori
/// normalized-state error bound, and the polynomial degree (0 when exact).
struct SolverOutcome {
  Vector state;
  double reported_eps1 = 0.0;
  int degree_used = 0;
};

/// ceil(kappa * ln(kappa / eps)), at least 1.
int cks_degree(double kappa, double eps);

/// Coefficients of sum_{k<t} (1 - x)^k = (1 - (1 - x)^t) / x in the
/// (1 - x)-monomial basis: t ones.
std::vector<double> truncated_inverse_coeffs(int t);

/// Inexact subroutine model: applies the truncated Taylor inverse p_t(M) with
/// sup_{[lambda_min, 1]} |p_t - 1/x| <= eps1 and returns the normalized
/// result. Requires M SPD, ||M|| <= 1 and eps1 < 1/2; reports 4 * eps1.
SolverOutcome inexact_qlsp(const SymMatrix& m, const Vector& v, double eps1);

/// Idealized subroutine: the normalized M^{-1} v.
SolverOutcome exact_qlsp(const SymMatrix& m, const Vector& v);

struct PsiFixed {
  double value = 1.0;
};

/// Self-consistent psi: start at 1, rebuild budget -> eta -> psi until
/// successive values differ by at most `tol`.
struct PsiFixedPoint {
  int max_iter = 50;
  double tol = 1e-10;
};

using PsiMode = std::variant<PsiFixed, PsiFixedPoint>;

enum class SolverKind { exact, inexact };

struct CatalystOptions {
  PsiMode psi_mode = PsiFixed{};
  SolverKind solver = SolverKind::inexact;
  // Overall scale of the prepared right-hand side; only the direction of
  // x0 + eta b matters to the returned state.
  double rhs_scale = 1.0;
};

struct CatalystResult {
  SolverOutcome outcome;
  PpaPlan plan;
  ErrorBudget budget;
  SymMatrix modified;  // (I + eta A) / ||I + eta A||
  Vector rhs;          // rhs_scale * (x0 + eta b)
  int psi_iterations = 0;
};

/// Single proximal step whose resolvent is applied by the chosen subroutine.
CatalystResult catalyst_solve(const LinearSystemInstance& inst, const Vector& x0, double epsilon,
                              double c, const CatalystOptions& options = {});

/// Measured split of the final error into the subroutine part and the
/// proximal part (both in normalized-state distance) and their combination.
struct ErrorDecomposition {
  double solver_error = 0.0;
  double ppa_error = 0.0;
  double total_error = 0.0;
};

ErrorDecomposition measure_errors(const LinearSystemInstance& inst, const CatalystResult& result);

}  // namespace catalyst
