#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "catalyst/complexity.hpp"
#include "catalyst/errors.hpp"
#include "catalyst/instance.hpp"
#include "catalyst/ppa.hpp"
#include "catalyst/solvers.hpp"

namespace catalyst::cli {
namespace {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}

  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Tracks the worst ratio |observed error| / allowed over a suite.
struct Tally {
  long long checks = 0;
  double worst = 0.0;

  void add(double violation, double allowed) {
    ++checks;
    worst = std::max(worst, allowed > 0.0 ? violation / allowed : (violation > 0.0 ? 1e300 : 0.0));
  }
  SuiteResult finish(std::string name, std::string detail) const {
    return SuiteResult{std::move(name), worst <= 1.0, checks, worst, std::move(detail)};
  }
};

SuiteResult lemma1(const VerifySettings& settings) {
  Tally tally;
  for (double kappa : {2.0, 20.0, 200.0}) {
    const LinearSystemInstance inst = generate(50, kappa, settings.seed);
    for (double eta : {0.1, 1.0, 10.0, 100.0, 1e4}) {
      const double predicted = kappa_hat(kappa, eta) * settings.kappa_hat_scale;
      const double measured = condition_number(normalized_proximal_matrix(inst.a, eta));
      tally.add(std::abs(predicted - measured), 1e-8 * predicted);
    }
  }
  return tally.finish("lemma1", "closed-form vs measured modified condition number, tol 1e-8*kappa_hat");
}

SuiteResult lemma3(const VerifySettings& settings) {
  Uniform rng(settings.seed);
  GaussianStream gauss(settings.seed ^ 0x5bd1e995ULL);
  Tally tally;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = rng.integer(1, 8);
    Vector x(n), dir(n);
    for (int i = 0; i < n; ++i) {
      x[i] = gauss.next();
      dir[i] = gauss.next();
    }
    x *= std::pow(10.0, rng(-3.0, 3.0)) / x.norm();
    const double eps = x.norm() * std::pow(10.0, rng(-4.0, 0.5));
    const Vector y = x + dir * (rng(0.0, 1.0) * eps / dir.norm());
    if (y.norm() == 0.0) continue;
    const double bound = (x - y).norm() / std::sqrt(x.norm() * y.norm());
    const double lhs = normalized_state_distance(x, y);
    tally.add(std::max(0.0, lhs - bound), 1e-12 * std::max(1.0, bound));
    // The stated bound uses eps >= ||x - y||; check that form too.
    const double stated = eps / std::sqrt(x.norm() * y.norm());
    tally.add(std::max(0.0, lhs - stated), 1e-12 * std::max(1.0, stated));
  }
  return tally.finish("lemma3", "normalized distance <= eps/sqrt(|x||y|) over 1e4 pairs, 1e-3..1e3");
}

SuiteResult prop2(const VerifySettings& settings) {
  Uniform rng(settings.seed + 2);
  Tally tally;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(4, 60);
    const double kappa = std::pow(10.0, rng(0.1, 2.5));
    const LinearSystemInstance inst = generate(n, kappa, rng.raw());
    Vector x0 = gaussian_vector(n, rng.raw()) * rng(0.1, 3.0);
    const double d = (x0 - inst.x_star).norm();
    const double eps2 = d * rng(0.02, 0.95);
    const double eta = select_eta(inst.kappa, d, eps2);
    const Vector x1 = ppa_step(inst, x0, eta);
    tally.add(std::max(0.0, (x1 - inst.x_star).norm() - eps2), 1e-10 * eps2);
    const double psi = compute_psi(inst, x0, eta);
    const double state_err = normalized_state_distance(x1, inst.x_star);
    tally.add(std::max(0.0, state_err - eps2 / psi), 1e-10 * eps2 / psi);
  }
  return tally.finish("prop2", "single step with eta = kappa(d/eps2 - 1) reaches eps2, 100 pairs");
}

SuiteResult cks(const VerifySettings&) {
  Tally tally;
  for (double kappa : {2.0, 10.0, 50.0}) {
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const int t = cks_degree(kappa, eps);
      const std::vector<double> coeffs = truncated_inverse_coeffs(t);
      double sup = 0.0;
      constexpr int kPoints = 10000;
      for (int i = 0; i < kPoints; ++i) {
        const double x = 1.0 / kappa + (1.0 - 1.0 / kappa) * i / (kPoints - 1);
        sup = std::max(sup, std::abs(eval_one_minus_poly(coeffs, x) - 1.0 / x));
      }
      tally.add(sup, eps);
    }
  }
  return tally.finish("cks", "sup |p_t - 1/x| on [1/kappa, 1] <= eps with t = ceil(kappa ln(kappa/eps))");
}

SuiteResult eq11(const VerifySettings&) {
  Tally tally;
  for (SolverModel model : {SolverModel::costa, SolverModel::cks}) {
    for (double hat : {1.0, 2.5, 4.8, 10.5, 99.0, 480.0}) {
      for (double c = 1.25; c <= 40.0; c *= 1.5) {
        for (double eps : {0.3, 0.1, 1e-2, 1e-4}) {
          const CostSplit s = decompose(hat, c, eps, model);
          tally.add(std::abs(s.improvement + s.overhead - s.total),
                    1e-12 * std::max(1.0, std::abs(s.total)));
        }
      }
    }
  }
  return tally.finish("eq11", "improvement + overhead = total, tol 1e-12 relative");
}

SuiteResult budget(const VerifySettings& settings) {
  Uniform rng(settings.seed + 11);
  Tally tally;
  while (tally.checks < 1000) {
    const double kappa = std::pow(10.0, rng(0.0, 3.0));
    const double c = 1.0 + std::pow(10.0, rng(-2.0, 1.5));
    const double psi = std::pow(10.0, rng(-1.0, 1.0));
    const double epsilon = std::pow(10.0, rng(-3.0, -0.3));
    const double eps2 = (1.0 - 1.0 / c) * epsilon * psi;
    const double d = eps2 * (1.0 + std::pow(10.0, rng(-2.0, 2.0)));
    const ErrorBudget b = split_budget(epsilon, c, psi);
    const double composed = kappa_hat(kappa, select_eta(kappa, d, b.eps2));
    const double direct = kappa_hat_budget(kappa, c, d, psi, epsilon);
    tally.add(std::abs(composed - direct), 1e-10);
  }
  return tally.finish("budget", "kappa_hat_budget == kappa_hat(select_eta(split_budget)), 1e3 points, tol 1e-10");
}

SuiteResult two_step(const VerifySettings& settings) {
  Uniform rng(settings.seed + 23);
  Tally tally;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(4, 40);
    const double kappa = std::pow(10.0, rng(0.2, 2.3));
    const LinearSystemInstance inst = generate(n, kappa, rng.raw());
    const double d = inst.x_star.norm();
    const double eps2 = d * rng(0.02, 0.9);
    const double eta = inst.kappa * (std::sqrt(d / eps2) - 1.0);
    const Vector closed = two_step_solve(inst, eta);
    const Vector iterated = ppa_run(inst, Vector::Zero(n), eta, 2).final_iterate();
    tally.add((closed - iterated).norm(), 1e-9);
    tally.add(std::max(0.0, (closed - inst.x_star).norm() - eps2), 1e-10 * eps2);
  }
  return tally.finish("two-step", "closed-form two-step matches two resolvent steps and reaches eps2");
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"lemma1", "lemma3", "prop2", "cks",
                                                      "eq11",   "budget", "two-step"};
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifySettings& settings) {
  if (name == "lemma1") return lemma1(settings);
  if (name == "lemma3") return lemma3(settings);
  if (name == "prop2") return prop2(settings);
  if (name == "cks") return cks(settings);
  if (name == "eq11") return eq11(settings);
  if (name == "budget") return budget(settings);
  if (name == "two-step") return two_step(settings);
  fail(ErrorKind::invalid_input, "unknown verification suite '" + std::string(name) + "'");
}

}  // namespace catalyst::cli
