#include "catalyst/ppa.hpp"

#include <cmath>
#include <string>

#include "catalyst/errors.hpp"

namespace catalyst {
namespace {

void require_eta(double eta) {
  require(std::isfinite(eta) && eta > 0.0, ErrorKind::invalid_input,
          "step size eta must be positive and finite (got " + std::to_string(eta) + ")");
}

void require_length(const LinearSystemInstance& inst, const Vector& x, const char* what) {
  require(x.size() == inst.a.dim(), ErrorKind::invalid_input,
          std::string(what) + " length does not match the instance dimension");
}

}  // namespace

double select_eta(double kappa, double d, double eps2) {
  require(kappa >= 1.0, ErrorKind::invalid_input, "kappa must be >= 1");
  require(eps2 > 0.0, ErrorKind::invalid_input, "eps2 must be positive");
  require(eps2 < d, ErrorKind::degenerate_target,
          "x0 is already within eps2 of the solution (d = " + std::to_string(d) +
              ", eps2 = " + std::to_string(eps2) + ")");
  return kappa * (d / eps2 - 1.0);
}

double min_iterations(double kappa, double d, double eps2, double eta) {
  require_eta(eta);
  require(kappa >= 1.0, ErrorKind::invalid_input, "kappa must be >= 1");
  require(eps2 > 0.0 && d > eps2, ErrorKind::invalid_input, "need d > eps2 > 0");
  return std::log(d / eps2) / std::log1p(eta / kappa);
}

SymMatrix proximal_matrix(const SymMatrix& a, double eta) {
  require(std::isfinite(eta) && eta >= 0.0, ErrorKind::invalid_input, "eta must be >= 0");
  Matrix m = eta * a.entries();
  m.diagonal().array() += 1.0;
  return SymMatrix(std::move(m));
}

SymMatrix normalized_proximal_matrix(const SymMatrix& a, double eta) {
  const SymMatrix shifted = proximal_matrix(a, eta);
  return SymMatrix(shifted.entries() / spectral_norm(shifted));
}

Vector ppa_step(const LinearSystemInstance& inst, const Vector& x, double eta) {
  require_eta(eta);
  require_length(inst, x, "iterate");
  return solve_spd(proximal_matrix(inst.a, eta), x + eta * inst.b);
}

PpaTrace ppa_run(const LinearSystemInstance& inst, const Vector& x0, double eta, int steps) {
  require_eta(eta);
  require(steps >= 1, ErrorKind::invalid_input, "steps must be >= 1");
  require_length(inst, x0, "x0");
  const SymMatrix resolvent = proximal_matrix(inst.a, eta);
  const Vector shift = eta * inst.b;

  PpaTrace trace;
  trace.iterates.reserve(static_cast<std::size_t>(steps) + 1);
  trace.errors.reserve(static_cast<std::size_t>(steps) + 1);
  trace.iterates.push_back(x0);
  trace.errors.push_back((x0 - inst.x_star).norm());
  for (int k = 0; k < steps; ++k) {
    Vector next = solve_spd(resolvent, trace.iterates.back() + shift);
    trace.errors.push_back((next - inst.x_star).norm());
    trace.iterates.push_back(std::move(next));
  }
  return trace;
}

Vector two_step_solve(const LinearSystemInstance& inst, double eta) {
  require_eta(eta);
  const SymMatrix resolvent = proximal_matrix(inst.a, eta);
  const Vector once = solve_spd(resolvent, eta * inst.b);
  return solve_spd(resolvent, once) + once;
}

GdResult gd_warm_start(const LinearSystemInstance& inst, const Vector& x0, double step, int iters) {
  require(std::isfinite(step) && step > 0.0, ErrorKind::invalid_input,
          "gradient step must be positive");
  require(iters >= 0, ErrorKind::invalid_input, "iteration count must be >= 0");
  require_length(inst, x0, "x0");
  const double limit = 2.0 / spectral_norm(inst.a);
  require(step < limit, ErrorKind::divergence_risk,
          "gradient step " + std::to_string(step) + " is not below the stability limit " +
              std::to_string(limit));

  GdResult out{x0, {}};
  out.errors.reserve(static_cast<std::size_t>(iters) + 1);
  out.errors.push_back((out.x - inst.x_star).norm());
  const Matrix& a = inst.a.entries();
  for (int k = 0; k < iters; ++k) {
    out.x -= step * (a * out.x - inst.b);
    out.errors.push_back((out.x - inst.x_star).norm());
  }
  return out;
}

double normalized_state_distance(const Vector& x, const Vector& y) {
  require(x.size() == y.size(), ErrorKind::invalid_input, "vector lengths differ");
  const double nx = x.norm();
  const double ny = y.norm();
  require(nx > 0.0 && ny > 0.0, ErrorKind::invalid_input,
          "cannot normalize a zero vector");
  return (x / nx - y / ny).norm();
}

double compute_psi(const LinearSystemInstance& inst, const Vector& x0, double eta) {
  const double step_norm = ppa_step(inst, x0, eta).norm();
  const double solution_norm = solve_spd(inst.a, inst.b).norm();
  return std::sqrt(step_norm * solution_norm);
}

}  // namespace catalyst
