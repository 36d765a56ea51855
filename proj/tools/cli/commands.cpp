#include "cli/commands.hpp"

#include <cmath>
#include <optional>

#include "catalyst/complexity.hpp"
#include "catalyst/errors.hpp"
#include "catalyst/instance.hpp"
#include "catalyst/ppa.hpp"
#include "catalyst/solvers.hpp"
#include "cli/csv.hpp"
#include "cli/verify.hpp"

namespace catalyst::cli {
namespace {

std::optional<double> opt(const std::optional<ComplexityReport>& r,
                          double ComplexityReport::*member) {
  if (!r) return std::nullopt;
  return (*r).*member;
}

void write_sweep_tail(CsvWriter& csv, const SweepCell& cell) {
  csv.field(opt(cell.report, &ComplexityReport::eta))
      .field(cell.psi)
      .field(cell.epsilon)
      .field(cell.d)
      .field(opt(cell.report, &ComplexityReport::kappa_hat))
      .field(cell.baseline)
      .field(opt(cell.report, &ComplexityReport::improvement))
      .field(opt(cell.report, &ComplexityReport::overhead))
      .field(opt(cell.report, &ComplexityReport::total))
      .field(cell.status);
  csv.end_row();
}

void write_sweep(std::ostream& out, const std::vector<SweepCell>& rows) {
  CsvWriter csv(out);
  csv.header(kSweepColumns);
  for (const SweepCell& cell : rows) {
    csv.field(cell.kappa).field(cell.c);
    write_sweep_tail(csv, cell);
  }
}

}  // namespace

int cmd_gen(const GenOptions& opts, std::ostream& out) {
  const LinearSystemInstance inst =
      generate(opts.n, opts.kappa, opts.seed, parse_spectrum_convention(opts.spectrum));
  out << "n=" << opts.n << " kappa_target=" << format_double(opts.kappa)
      << " kappa_measured=" << format_double(condition_number(inst.a))
      << " norm=" << format_double(spectral_norm(inst.a)) << " seed=" << opts.seed
      << " spectrum=" << to_string(inst.convention) << '\n';
  return kExitOk;
}

int cmd_sweep_c(const SweepCOptions& opts, std::ostream& out) {
  require(!opts.c.empty(), ErrorKind::invalid_input, "--c needs at least one value");
  write_sweep(out, sweep_c(opts.kappa, opts.d, opts.psi, opts.epsilon, opts.c,
                           parse_solver_model(opts.model)));
  return kExitOk;
}

int cmd_sweep_kappa(const SweepKappaOptions& opts, std::ostream& out) {
  require(!opts.kappa.empty(), ErrorKind::invalid_input, "--kappa needs at least one value");
  write_sweep(out, sweep_kappa(opts.kappa, opts.c, opts.d, opts.psi, opts.epsilon,
                               parse_solver_model(opts.model)));
  return kExitOk;
}

int cmd_warmstart(const WarmStartOptions& opts, std::ostream& out) {
  require(!opts.kappa.empty() && !opts.gd_steps.empty(), ErrorKind::invalid_input,
          "--kappa and --gd-steps need at least one value each");
  WarmStartConfig config;
  config.kappa_values = opts.kappa;
  config.gd_steps = opts.gd_steps;
  config.epsilon = opts.epsilon;
  config.c = opts.c;
  config.psi = opts.psi;
  config.n = opts.n;
  config.seed = opts.seed;
  config.gd_stepsize = opts.gd_stepsize;
  config.convention = parse_spectrum_convention(opts.spectrum);
  config.model = parse_solver_model(opts.model);

  CsvWriter csv(out);
  csv.header(kWarmStartColumns);
  for (const WarmStartCell& row : warmstart_curve(config)) {
    csv.field(row.cell.kappa).field(row.gd_steps).field(row.cell.c);
    write_sweep_tail(csv, row.cell);
  }
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& summary) {
  require(opts.runs >= 1, ErrorKind::invalid_input, "--runs must be >= 1");
  require(opts.x0 == "zero" || opts.x0 == "xstar", ErrorKind::invalid_input,
          "--x0 must be zero or xstar");
  const SpectrumConvention convention = parse_spectrum_convention(opts.spectrum);

  CatalystOptions options;
  if (opts.psi_mode == "fixed") {
    options.psi_mode = PsiFixed{opts.psi};
  } else if (opts.psi_mode == "fixed-point") {
    options.psi_mode = PsiFixedPoint{opts.psi_max_iter, opts.psi_tol};
  } else {
    fail(ErrorKind::invalid_input, "--psi-mode must be fixed or fixed-point");
  }
  if (opts.solver == "exact") {
    options.solver = SolverKind::exact;
  } else if (opts.solver == "inexact") {
    options.solver = SolverKind::inexact;
  } else {
    fail(ErrorKind::invalid_input, "--solver must be exact or inexact");
  }

  CsvWriter csv(out);
  csv.header(kSimulateColumns);
  int exceeded = 0;
  int errored = 0;
  double worst = 0.0;
  for (int run = 0; run < opts.runs; ++run) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(run);
    const LinearSystemInstance inst = generate(opts.n, opts.kappa, seed, convention);
    const Vector x0 = opts.x0 == "xstar" ? inst.x_star : Vector::Zero(opts.n);
    csv.field(static_cast<long long>(opts.n))
        .field(opts.kappa)
        .field(static_cast<long long>(seed))
        .field(opts.epsilon)
        .field(opts.c);
    try {
      const CatalystResult result = catalyst_solve(inst, x0, opts.epsilon, opts.c, options);
      const ErrorDecomposition err = measure_errors(inst, result);
      const bool ok = err.total_error <= opts.epsilon;
      if (!ok) ++exceeded;
      worst = std::max(worst, err.total_error);
      csv.field(result.budget.psi)
          .field(opts.solver)
          .field(result.plan.eta)
          .field(result.plan.d)
          .field(result.budget.eps1)
          .field(result.budget.eps2)
          .field(result.outcome.degree_used)
          .field(err.solver_error)
          .field(err.ppa_error)
          .field(err.total_error)
          .field(ok ? "ok" : "exceeds-epsilon");
    } catch (const Error& e) {
      ++errored;
      csv.field(std::optional<double>{})
          .field(opts.solver)
          .field(std::optional<double>{})
          .field((x0 - inst.x_star).norm())
          .field(std::optional<double>{})
          .field(std::optional<double>{})
          .field(std::optional<double>{})
          .field(std::optional<double>{})
          .field(std::optional<double>{})
          .field(std::optional<double>{})
          .field(to_string(e.kind()));
      summary << "run " << run << " (seed " << seed << "): " << e.what() << '\n';
    }
    csv.end_row();
  }
  summary << "simulate: " << opts.runs << " run(s), " << errored << " rejected, " << exceeded
          << " above epsilon=" << format_double(opts.epsilon)
          << ", worst total error=" << format_double(worst) << '\n';
  if (exceeded > 0) return kExitFailure;
  if (errored > 0) return kExitInvalidInput;
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  std::vector<std::string> names = opts.suites;
  if (names.empty()) {
    for (auto name : suite_names()) names.emplace_back(name);
  }
  // Reject unknown names before spending time on any suite.
  for (const auto& name : names) {
    bool known = false;
    for (auto candidate : suite_names()) known = known || candidate == name;
    require(known, ErrorKind::invalid_input, "unknown verification suite '" + name + "'");
  }
  VerifySettings settings;
  settings.seed = opts.seed;
  settings.kappa_hat_scale = opts.perturb_kappa_hat;

  bool all = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, settings);
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks
        << " worst_ratio=" << format_double(r.worst) << " : " << r.detail << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace catalyst::cli
