#pragma once

// Reference computations used only by tests. They deliberately avoid the
// library's own Jacobi spectrum so that checks stay independent of it.

#include <random>

#include <Eigen/Dense>

namespace catalyst::testing {

inline Eigen::MatrixXd random_symmetric(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  return 0.5 * (g + g.transpose());
}

inline Eigen::MatrixXd random_spd(Eigen::Index n, std::mt19937_64& rng) {
  const Eigen::MatrixXd s = random_symmetric(n, rng);
  return s * s.transpose() + static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n);
}

inline Eigen::VectorXd random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

/// Eigenvalues from Eigen's tridiagonal QR solver, ascending.
inline Eigen::VectorXd reference_eigenvalues(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

/// Solution of m x = v by partial-pivot LU.
inline Eigen::VectorXd reference_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& v) {
  return m.partialPivLu().solve(v);
}

/// sum_k coeffs[k] (1 - x)^k by explicit powers.
inline double power_sum(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  double power = 1.0;
  for (double c : coeffs) {
    acc += c * power;
    power *= 1.0 - x;
  }
  return acc;
}

}  // namespace catalyst::testing
