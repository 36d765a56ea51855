#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "catalyst/errors.hpp"
#include "catalyst/instance.hpp"
#include "catalyst/ppa.hpp"
#include "oracles.hpp"

namespace catalyst {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::invalid_input;
}

// (I + eta A)^{-1} v via dense LU, independent of the spectral solve.
Vector reference_resolvent(const LinearSystemInstance& inst, double eta, const Vector& v) {
  const Index n = inst.a.dim();
  return testing::reference_solve(Matrix::Identity(n, n) + eta * inst.a.entries(), v);
}

TEST(SelectEta, Examples) {
  EXPECT_NEAR(select_eta(20.0, 1.0, 0.1), 180.0, 1e-12);
  EXPECT_DOUBLE_EQ(select_eta(2.0, 4.0, 1.0), 6.0);
}

TEST(SelectEta, DegenerateTargetAndBadInput) {
  EXPECT_EQ(kind_of([] { select_eta(5.0, 0.1, 0.1); }), ErrorKind::degenerate_target);
  EXPECT_EQ(kind_of([] { select_eta(5.0, 0.1, 0.2); }), ErrorKind::degenerate_target);
  EXPECT_EQ(kind_of([] { select_eta(5.0, 1.0, 0.0); }), ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([] { select_eta(0.5, 1.0, 0.1); }), ErrorKind::invalid_input);
}

TEST(MinIterations, SingleStepEtaNeedsOneStep) {
  for (double kappa : {1.0, 20.0, 500.0}) {
    for (double ratio : {1.5, 10.0, 1e4}) {
      const double eta = select_eta(kappa, ratio, 1.0);
      EXPECT_NEAR(min_iterations(kappa, ratio, 1.0, eta), 1.0, 1e-12);
    }
  }
}

TEST(MinIterations, TwoStepEtaNeedsTwoSteps) {
  const double eta = 20.0 * (std::sqrt(10.0) - 1.0);
  EXPECT_NEAR(min_iterations(20.0, 1.0, 0.1, eta), 2.0, 1e-12);
}

TEST(MinIterations, ConstructedCube) {
  const double kappa = 7.0, eta = 3.5;
  const double d = std::pow(1.0 + eta / kappa, 3);
  EXPECT_NEAR(min_iterations(kappa, d, 1.0, eta), 3.0, 1e-12);
}

TEST(MinIterations, RejectsBadInput) {
  EXPECT_THROW(min_iterations(2.0, 1.0, 0.1, 0.0), Error);
  EXPECT_THROW(min_iterations(2.0, 0.1, 0.1, 1.0), Error);
}

TEST(PpaStep, SolutionIsFixedPoint) {
  const LinearSystemInstance inst = generate(30, 40.0, 3);
  EXPECT_LE((ppa_step(inst, inst.x_star, 7.0) - inst.x_star).norm(), 1e-12);
}

TEST(PpaStep, IdentityMatrixIsScalarResolvent) {
  const LinearSystemInstance inst = make_instance(SymMatrix::identity(3), Vector{{0.0, 0.6, 0.8}});
  const double eta = 4.0;
  const Vector x1 = ppa_step(inst, Vector::Zero(3), eta);
  EXPECT_LE((x1 - (eta / (1.0 + eta)) * inst.b).norm(), 1e-15);
}

TEST(PpaStep, SelectedEtaReachesTargetAgainstDirectSolve) {
  const LinearSystemInstance inst = generate(100, 100.0, 12);
  const Vector x0 = Vector::Zero(100);
  const double eps2 = 0.1;
  const double eta = select_eta(inst.kappa, (x0 - inst.x_star).norm(), eps2);
  const Vector x1 = ppa_step(inst, x0, eta);
  const Vector reference = reference_resolvent(inst, eta, x0 + eta * inst.b);
  EXPECT_LE((x1 - reference).norm(), 1e-10);
  EXPECT_LE((x1 - inst.x_star).norm(), eps2);
  const Vector residual = proximal_matrix(inst.a, eta).apply(x1) - (x0 + eta * inst.b);
  EXPECT_LE(residual.norm(), 1e-8 * (x0 + eta * inst.b).norm());
}

TEST(PpaStep, RejectsNonPositiveEta) {
  const LinearSystemInstance inst = generate(4, 2.0, 1);
  EXPECT_EQ(kind_of([&] { ppa_step(inst, Vector::Zero(4), 0.0); }), ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([&] { ppa_step(inst, Vector::Zero(3), 1.0); }), ErrorKind::invalid_input);
}

TEST(SingleStepGuarantee, HoldsOverRandomPairs) {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(u(rng) * 60);
    const double kappa = std::pow(10.0, 2.5 * u(rng));
    const LinearSystemInstance inst = generate(n, kappa, rng());
    const Vector x0 = testing::random_vector(n, rng) * (0.1 + 2.0 * u(rng));
    const double d = (x0 - inst.x_star).norm();
    const double eps2 = d * (0.01 + 0.98 * u(rng));
    const double eta = select_eta(inst.kappa, d, eps2);
    const Vector x1 = ppa_step(inst, x0, eta);
    ASSERT_LE((x1 - inst.x_star).norm(), eps2 * (1.0 + 1e-12)) << "trial " << trial;
    const double psi = compute_psi(inst, x0, eta);
    ASSERT_LE(normalized_state_distance(x1, inst.x_star), eps2 / psi * (1.0 + 1e-12));
  }
}

TEST(PpaRun, OneStepMatchesPpaStep) {
  const LinearSystemInstance inst = generate(20, 15.0, 4);
  const Vector x0 = gaussian_vector(20, 5);
  const PpaTrace trace = ppa_run(inst, x0, 3.0, 1);
  ASSERT_EQ(trace.iterates.size(), 2u);
  EXPECT_LE((trace.final_iterate() - ppa_step(inst, x0, 3.0)).norm(), 1e-14);
  EXPECT_DOUBLE_EQ(trace.errors.front(), (x0 - inst.x_star).norm());
}

TEST(PpaRun, MinimumEigenvectorContractsAtExactRate) {
  const double kappa = 50.0, eta = 12.0;
  const LinearSystemInstance inst = generate(30, kappa, 6);
  const Vector u_min = inst.a.spectrum().eigenvectors.col(0);
  const Vector x0 = inst.x_star + 0.7 * u_min;
  const PpaTrace trace = ppa_run(inst, x0, eta, 6);
  for (std::size_t k = 0; k < trace.errors.size(); ++k) {
    const double bound = 0.7 / std::pow(1.0 + eta / kappa, static_cast<double>(k));
    EXPECT_NEAR(trace.errors[k], bound, 1e-9) << "step " << k;
  }
}

TEST(PpaRun, ErrorsRespectContractionBoundAndDecrease) {
  const double kappa = 50.0, eta = 2.0;
  const LinearSystemInstance inst = generate(40, kappa, 8);
  const Vector x0 = gaussian_vector(40, 9);
  const PpaTrace trace = ppa_run(inst, x0, eta, 5);
  for (std::size_t k = 1; k < trace.errors.size(); ++k) {
    EXPECT_LE(trace.errors[k], trace.errors[k - 1]);
    EXPECT_LE(trace.errors[k],
              trace.errors[0] / std::pow(1.0 + eta / kappa, static_cast<double>(k)) * (1 + 1e-12));
  }
}

TEST(PpaRun, ErrorVectorUnfoldsToResolventPower) {
  const double eta = 3.0;
  const int steps = 4;
  const LinearSystemInstance inst = generate(25, 30.0, 10);
  const Vector x0 = gaussian_vector(25, 11);
  Vector expected = x0 - inst.x_star;
  for (int k = 0; k < steps; ++k) expected = reference_resolvent(inst, eta, expected);
  const PpaTrace trace = ppa_run(inst, x0, eta, steps);
  EXPECT_LE((trace.final_iterate() - inst.x_star - expected).norm(), 1e-9);
}

TEST(PpaRun, RejectsZeroSteps) {
  const LinearSystemInstance inst = generate(4, 2.0, 1);
  EXPECT_THROW(ppa_run(inst, Vector::Zero(4), 1.0, 0), Error);
}

TEST(TwoStep, IdentityMatrixClosedForm) {
  const LinearSystemInstance inst = make_instance(SymMatrix::identity(2), Vector{{0.6, -0.8}});
  const double eta = 2.5;
  const Vector expected = (eta / std::pow(1.0 + eta, 2) + eta / (1.0 + eta)) * inst.b;
  EXPECT_LE((two_step_solve(inst, eta) - expected).norm(), 1e-15);
}

TEST(TwoStep, MatchesTwoResolventStepsOnRandomInstances) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(u(rng) * 30);
    const LinearSystemInstance inst = generate(n, 1.0 + 199.0 * u(rng), rng());
    const double eta = std::pow(10.0, 3.0 * u(rng) - 1.0);
    const Vector iterated = ppa_run(inst, Vector::Zero(n), eta, 2).final_iterate();
    ASSERT_LE((two_step_solve(inst, eta) - iterated).norm(), 1e-9);
  }
}

TEST(TwoStep, SmallerEtaReachesTarget) {
  const LinearSystemInstance inst = generate(40, 20.0, 13);
  const double d = inst.x_star.norm();
  const double eps2 = d / 10.0;
  const double eta = 20.0 * (std::sqrt(10.0) - 1.0);
  EXPECT_LE((two_step_solve(inst, eta) - inst.x_star).norm(), eps2);
}

TEST(GradientDescent, StartingAtSolutionStaysPut) {
  const LinearSystemInstance inst = generate(10, 5.0, 1);
  const GdResult r = gd_warm_start(inst, inst.x_star, 1.5, 20);
  EXPECT_LE((r.x - inst.x_star).norm(), 1e-14);
  EXPECT_LE(r.errors.back(), 1e-14);
  EXPECT_EQ(r.errors.size(), 21u);
}

TEST(GradientDescent, RejectsUnstableStep) {
  const LinearSystemInstance inst = generate(10, 5.0, 1);
  EXPECT_EQ(kind_of([&] { gd_warm_start(inst, Vector::Zero(10), 2.0, 5); }),
            ErrorKind::divergence_risk);
  EXPECT_EQ(kind_of([&] { gd_warm_start(inst, Vector::Zero(10), 0.0, 5); }),
            ErrorKind::invalid_input);
}

TEST(GradientDescent, DiagonalContractionFollowsScalarRecurrence) {
  const double kappa = 8.0, step = 1.5;
  const LinearSystemInstance inst =
      make_instance(SymMatrix::diagonal(Vector{{1.0, 1.0 / kappa}}), Vector{{0.6, 0.8}});
  const int iters = 12;
  const GdResult r = gd_warm_start(inst, Vector::Zero(2), step, iters);
  const Vector err = r.x - inst.x_star;
  EXPECT_NEAR(err[0], -0.6 * std::pow(1.0 - step, iters), 1e-14);
  EXPECT_NEAR(err[1], -0.8 * std::pow(1.0 - step / kappa, iters), 1e-14);
}

TEST(GradientDescent, ReferenceBudgetsShrinkDistance) {
  for (double kappa : {100.0, 300.0, 500.0}) {
    const LinearSystemInstance inst = generate(100, kappa, 1235);
    const GdResult r = gd_warm_start(inst, Vector::Zero(100), 1.5, 1000);
    for (std::size_t k = 1; k < r.errors.size(); ++k) ASSERT_LT(r.errors[k], r.errors[k - 1]);
    EXPECT_LT(r.errors[1000], r.errors[500]);
    EXPECT_LT(r.errors[500], r.errors[200]);
    EXPECT_NEAR(r.errors[0], 1.0, 1e-12);
  }
}

TEST(NormalizedStateDistance, Examples) {
  const Vector x{{1.0, -2.0, 0.5}};
  EXPECT_NEAR(normalized_state_distance(x, 3.0 * x), 0.0, 1e-15);
  EXPECT_NEAR(normalized_state_distance(x, -x), 2.0, 1e-15);
  EXPECT_THROW(normalized_state_distance(x, Vector::Zero(3)), Error);
}

TEST(NormalizedStateDistance, BoundedByScaledDistance) {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + trial % 6;
    Vector x = testing::random_vector(n, rng);
    x *= std::pow(10.0, -3.0 + 6.0 * u(rng)) / x.norm();
    Vector dir = testing::random_vector(n, rng);
    const double eps = x.norm() * std::pow(10.0, -5.0 + 5.0 * u(rng));
    const Vector y = x + dir * (eps * u(rng) / dir.norm());
    const double bound = eps / std::sqrt(x.norm() * y.norm());
    ASSERT_LE(normalized_state_distance(x, y), bound * (1.0 + 1e-12) + 1e-15);
  }
}

TEST(NormalizedStateDistance, PairAtFixedSeparation) {
  std::mt19937_64 rng(88);
  const Vector x = testing::random_vector(10, rng);
  Vector dir = testing::random_vector(10, rng);
  const Vector y = x + 0.01 * dir / dir.norm();
  EXPECT_LE(normalized_state_distance(x, y), 0.01 / std::sqrt(x.norm() * y.norm()));
}

TEST(ComputePsi, IdentityMatrixClosedForm) {
  const Vector x_star{{0.0, 0.6, 0.8}};
  const LinearSystemInstance inst = make_instance(SymMatrix::identity(3), x_star);
  const double eta = 3.0;
  EXPECT_NEAR(compute_psi(inst, Vector::Zero(3), eta), std::sqrt(eta / (1.0 + eta)), 1e-15);
}

TEST(ComputePsi, LargeEtaLimitIsSolutionNorm) {
  const LinearSystemInstance inst = generate(30, 40.0, 14);
  EXPECT_NEAR(compute_psi(inst, Vector::Zero(30), 1e8), 1.0, 1e-3);
}

TEST(ComputePsi, MatchesDefinition) {
  const LinearSystemInstance inst = generate(100, 100.0, 15);
  const Vector x0 = 0.3 * gaussian_vector(100, 16);
  const double eta = 250.0;
  const double step = reference_resolvent(inst, eta, x0 + eta * inst.b).norm();
  const double sol = testing::reference_solve(inst.a.entries(), inst.b).norm();
  EXPECT_NEAR(compute_psi(inst, x0, eta), std::sqrt(step * sol), 1e-10);
}

}  // namespace
}  // namespace catalyst
