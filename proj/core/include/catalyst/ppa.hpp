#pragma once

#include <vector>

#include "catalyst/instance.hpp"
#include "catalyst/linalg.hpp"

namespace catalyst {

struct PpaPlan {
  double eta = 0.0;
  int steps = 1;
  Vector x0;
  double d = 0.0;  // ||x0 - x_star||
};

/// Iterates x_0..x_t of the proximal point recursion and their distances to
/// x_star.
struct PpaTrace {
  std::vector<Vector> iterates;
  std::vector<double> errors;

  const Vector& final_iterate() const { return iterates.back(); }
};

struct GdResult {
  Vector x;
  std::vector<double> errors;  // ||x_k - x_star||, k = 0..iters
};

/// Step size for which one proximal step reaches eps2 from distance d:
/// eta = kappa * (d / eps2 - 1). Throws degenerate_target when eps2 >= d.
double select_eta(double kappa, double d, double eps2);

/// Real lower bound on the number of proximal steps needed to contract d to
/// eps2: log(d / eps2) / log(1 + eta / kappa).
double min_iterations(double kappa, double d, double eps2, double eta);

/// I + eta A.
SymMatrix proximal_matrix(const SymMatrix& a, double eta);

/// (I + eta A) / ||I + eta A||, the matrix handed to the inner solver.
SymMatrix normalized_proximal_matrix(const SymMatrix& a, double eta);

/// One resolvent step (I + eta A)^{-1} (x + eta b).
Vector ppa_step(const LinearSystemInstance& inst, const Vector& x, double eta);

PpaTrace ppa_run(const LinearSystemInstance& inst, const Vector& x0, double eta, int steps);

/// Two proximal steps from x0 = 0 in closed form:
/// ((I + eta A)^{-2} + (I + eta A)^{-1}) eta b.
Vector two_step_solve(const LinearSystemInstance& inst, double eta);

/// Plain gradient descent on 0.5 x^T A x - b^T x. Rejects step >= 2/||A||.
GdResult gd_warm_start(const LinearSystemInstance& inst, const Vector& x0, double step, int iters);

/// || x/||x|| - y/||y|| ||, the distance between the corresponding states.
double normalized_state_distance(const Vector& x, const Vector& y);

/// sqrt(||(I + eta A)^{-1} (x0 + eta b)|| * ||A^{-1} b||).
double compute_psi(const LinearSystemInstance& inst, const Vector& x0, double eta);

}  // namespace catalyst
