#include "cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "catalyst/errors.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace catalyst::cli {
namespace {

struct Invocation {
  std::string out_path;
  std::function<int(std::ostream&, std::ostream&)> action;
};

void add_list(CLI::App* sub, const std::string& name, std::vector<double>& target,
              const std::string& help) {
  sub->add_option(name, target, help)->delimiter(',')->capture_default_str();
}

CLI::App* add_gen(CLI::App& app, Invocation& inv, GenOptions& o) {
  auto* sub = app.add_subcommand("gen", "Generate an instance and print its summary line");
  sub->add_option("--n", o.n, "Dimension")->capture_default_str();
  sub->add_option("--kappa", o.kappa, "Target condition parameter")->capture_default_str();
  sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  sub->add_option("--spectrum", o.spectrum, "linear | gram")->capture_default_str();
  sub->callback([&inv, &o] { inv.action = [&o](std::ostream& out, std::ostream&) { return cmd_gen(o, out); }; });
  return sub;
}

CLI::App* add_sweep_c(CLI::App& app, Invocation& inv, SweepCOptions& o) {
  auto* sub = app.add_subcommand("sweep-c", "Wrapped cost versus the split constant c (CSV)");
  sub->add_option("--kappa", o.kappa, "Condition number")->capture_default_str();
  sub->add_option("--d", o.d, "Initial distance ||x0 - x*||")->capture_default_str();
  sub->add_option("--psi", o.psi, "Norm factor psi")->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "Target accuracy")->capture_default_str();
  add_list(sub, "--c", o.c, "Split constants (comma separated)");
  sub->add_option("--model", o.model, "costa | cks")->capture_default_str();
  sub->callback([&inv, &o] { inv.action = [&o](std::ostream& out, std::ostream&) { return cmd_sweep_c(o, out); }; });
  return sub;
}

CLI::App* add_sweep_kappa(CLI::App& app, Invocation& inv, SweepKappaOptions& o) {
  auto* sub = app.add_subcommand("sweep-kappa", "Wrapped cost versus kappa (CSV, qualitative)");
  add_list(sub, "--kappa", o.kappa, "Condition numbers (comma separated)");
  sub->add_option("--c", o.c, "Split constant")->capture_default_str();
  sub->add_option("--d", o.d, "Initial distance")->capture_default_str();
  sub->add_option("--psi", o.psi, "Norm factor psi")->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "Target accuracy")->capture_default_str();
  sub->add_option("--model", o.model, "costa | cks")->capture_default_str();
  sub->callback([&inv, &o] { inv.action = [&o](std::ostream& out, std::ostream&) { return cmd_sweep_kappa(o, out); }; });
  return sub;
}

CLI::App* add_warmstart(CLI::App& app, Invocation& inv, WarmStartOptions& o) {
  auto* sub = app.add_subcommand("warmstart", "Wrapped cost after gradient-descent warm start (CSV)");
  add_list(sub, "--kappa", o.kappa, "Condition parameters (comma separated)");
  sub->add_option("--gd-steps", o.gd_steps, "Gradient-descent budgets (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "Target accuracy")->capture_default_str();
  sub->add_option("--c", o.c, "Split constant")->capture_default_str();
  sub->add_option("--psi", o.psi, "Norm factor psi")->capture_default_str();
  sub->add_option("--n", o.n, "Dimension")->capture_default_str();
  sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  sub->add_option("--gd-stepsize", o.gd_stepsize, "Gradient step")->capture_default_str();
  sub->add_option("--spectrum", o.spectrum, "linear | gram")->capture_default_str();
  sub->add_option("--model", o.model, "costa | cks")->capture_default_str();
  sub->callback([&inv, &o] { inv.action = [&o](std::ostream& out, std::ostream&) { return cmd_warmstart(o, out); }; });
  return sub;
}

CLI::App* add_simulate(CLI::App& app, Invocation& inv, SimulateOptions& o) {
  auto* sub = app.add_subcommand("simulate", "End-to-end wrapped solve with measured errors (CSV)");
  sub->add_option("--n", o.n, "Dimension")->capture_default_str();
  sub->add_option("--kappa", o.kappa, "Condition parameter")->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed of the first run")->capture_default_str();
  sub->add_option("--runs", o.runs, "Number of runs (seeds seed, seed+1, ...)")->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "Target accuracy")->capture_default_str();
  sub->add_option("--c", o.c, "Split constant")->capture_default_str();
  sub->add_option("--psi-mode", o.psi_mode, "fixed | fixed-point")->capture_default_str();
  sub->add_option("--psi", o.psi, "Psi value for fixed mode")->capture_default_str();
  sub->add_option("--psi-max-iter", o.psi_max_iter, "Fixed-point iteration cap")->capture_default_str();
  sub->add_option("--psi-tol", o.psi_tol, "Fixed-point tolerance")->capture_default_str();
  sub->add_option("--solver", o.solver, "exact | inexact")->capture_default_str();
  sub->add_option("--x0", o.x0, "zero | xstar")->capture_default_str();
  sub->add_option("--spectrum", o.spectrum, "linear | gram")->capture_default_str();
  sub->callback([&inv, &o] {
    inv.action = [&o](std::ostream& out, std::ostream& err) { return cmd_simulate(o, out, err); };
  });
  return sub;
}

CLI::App* add_verify(CLI::App& app, Invocation& inv, VerifyOptions& o) {
  auto* sub = app.add_subcommand("verify", "Run the property suites and print one line per suite");
  sub->add_option("--suites", o.suites, "Suites to run (comma separated; default all)")
      ->delimiter(',');
  sub->add_option("--seed", o.seed, "Seed for randomized suites")->capture_default_str();
  sub->add_option("--perturb-kappa-hat", o.perturb_kappa_hat,
                  "Scale applied to the closed-form kappa_hat (harness self-test)")
      ->capture_default_str();
  sub->callback([&inv, &o] { inv.action = [&o](std::ostream& out, std::ostream&) { return cmd_verify(o, out); }; });
  return sub;
}

// Pulls `--config <path>` / `--config=<path>` out of the argument list.
std::optional<std::string> extract_config(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      require(i + 1 < args.size(), ErrorKind::invalid_input, "--config needs a path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return path;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proximal-point catalyst laboratory for linear-system solvers"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Invocation inv;
  GenOptions gen;
  SweepCOptions sweep_c;
  SweepKappaOptions sweep_kappa;
  WarmStartOptions warm;
  SimulateOptions sim;
  VerifyOptions verify;
  for (CLI::App* sub : {add_gen(app, inv, gen), add_sweep_c(app, inv, sweep_c),
                        add_sweep_kappa(app, inv, sweep_kappa), add_warmstart(app, inv, warm),
                        add_simulate(app, inv, sim), add_verify(app, inv, verify)}) {
    sub->add_option("--out", inv.out_path, "Write output to this file instead of stdout");
  }

  try {
    std::vector<std::string> args = raw_args;
    if (const auto config_path = extract_config(args)) {
      require(!args.empty(), ErrorKind::invalid_input, "--config given without a subcommand");
      const ConfigEntries entries = read_config_file(*config_path);
      std::vector<std::string> rest(args.begin() + 1, args.end());
      std::vector<std::string> merged = merge_config(rest, entries);
      merged.insert(merged.begin(), args.front());
      args = std::move(merged);
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (inv.out_path.empty()) return inv.action(out, err);
    std::ofstream file(inv.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << inv.out_path << "'\n";
      return kExitInvalidInput;
    }
    const int status = inv.action(file, err);
    file.flush();
    if (!file) {
      err << "error: failed writing '" << inv.out_path << "'\n";
      return kExitFailure;
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace catalyst::cli
