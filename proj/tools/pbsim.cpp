#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pbsim/config.hpp"
#include "pbsim/csv.hpp"
#include "pbsim/errors.hpp"
#include "pbsim/hilbert.hpp"
#include "pbsim/interference.hpp"
#include "pbsim/liouvillian.hpp"
#include "pbsim/model.hpp"
#include "pbsim/observables.hpp"
#include "pbsim/spectrum.hpp"
#include "pbsim/sweep.hpp"
#include "pbsim/version.hpp"

namespace {

using namespace pbsim;

RunConfig load_config(const std::string& path, const std::vector<std::string>& sets) {
  RunConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError({"cannot open config file '" + path + "'"});
    std::ostringstream ss;
    ss << in.rdbuf();
    cfg = parse_config(ss.str());
  }
  for (const auto& s : sets) apply_override(cfg, s);
  cfg.spec.validate();
  return cfg;
}

int run_sweep_command(RunConfig cfg, std::optional<SweepMode> forced_mode) {
  if (forced_mode) cfg.spec.mode = *forced_mode;
  const SweepResult result = run_sweep(cfg.spec);
  const std::string path = cfg.output.path.empty()
                               ? to_string(cfg.spec.mode) + ".csv"
                               : cfg.output.path;
  write_file_atomic(path, render_csv(result.columns, result.rows, cfg.output.precision));
  write_file_atomic(path + ".meta.json", result.metadata_json + "\n");
  const std::size_t failed = result.failed_rows();
  std::cerr << "wrote " << path << " and " << path << ".meta.json (" << result.rows.size()
            << " rows, " << failed << " failed)\n";
  if (!result.rows.empty() && failed * 10 > result.rows.size()) {
    std::cerr << "more than 10% of grid points failed; see row_errors in the metadata\n";
    return 2;
  }
  return 0;
}

int run_spectrum(const RunConfig& cfg) {
  const auto& p = cfg.spec.fixed;
  std::cout << "n,delta_minus,delta_plus,e_minus,e_plus\n";
  for (int n = 1; n <= cfg.spec.solver.n_max; ++n) {
    const auto s = dressed_splitting(n, p.g, p.u0);
    const auto e = dressed_energy(n, p);
    std::cout << n << ',' << format_double(s.lower) << ',' << format_double(s.upper)
              << ',' << format_double(e.lower) << ',' << format_double(e.upper) << '\n';
  }
  std::cerr << "red-sideband resonance delta_c = "
            << format_double(resonance_detuning(Branch::lower, p)) << "\n";
  return 0;
}

int run_optimum(const RunConfig& cfg) {
  const auto& p = cfg.spec.fixed;
  const auto cond = optimal_conditions(p);
  SystemParams tuned = p;
  tuned.theta = cond.theta;
  tuned.omega_m = cond.omega_m;
  const auto amps = weak_drive_amplitudes(tuned);
  std::cout << "quantity,value\n";
  std::cout << "theta_opt," << format_double(cond.theta) << '\n';
  std::cout << "omega_m_opt," << format_double(cond.omega_m) << '\n';
  std::cout << "resonance_delta_c_lower,"
            << format_double(resonance_detuning(Branch::lower, p)) << '\n';
  std::cout << "resonance_delta_c_upper,"
            << format_double(resonance_detuning(Branch::upper, p)) << '\n';
  std::cout << "c2_up_abs," << format_double(std::abs(amps.c2_up)) << '\n';
  std::cout << "analytic_g2," << format_double(analytic_g2(amps)) << '\n';
  return 0;
}

struct CheckReport {
  int failures = 0;

  void run(const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string detail = body();
      std::cout << "[PASS] " << name << (detail.empty() ? "" : ": " + detail) << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << name << ": " << e.what() << '\n';
    }
  }
};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

std::string bound(const char* label, double value, double limit) {
  return std::string(label) + " " + format_double(value, 3) + " (limit " +
         format_double(limit, 3) + ")";
}

int run_check() {
  CheckReport report;
  const Basis b(8);

  report.run("operator algebra", [&] {
    const Matrix sm = spin_lowering(b).mat;
    const Matrix sp = spin_raising(b).mat;
    const Matrix id = identity_operator(b).mat;
    require((sm * sm).norm() == 0.0, "spin lowering must square to zero");
    require((sp * sm + sm * sp - id).norm() <= 1e-14, "spin anticommutator must be identity");
    const Matrix n_op = number_operator(b).mat;
    const Matrix ada = cavity_creator(b).mat * cavity_annihilator(b).mat;
    require((ada - n_op).norm() <= 1e-14, "a†a must equal the number operator");
    return std::string();
  });

  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> ug(0.1, 5.0), u10(-10.0, 10.0);

  report.run("hamiltonian hermiticity and excitation conservation", [&] {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      SystemParams p;
      p.g = ug(rng);
      p.u0 = u10(rng);
      p.delta_c = u10(rng);
      p.eta = 0.0;
      const Matrix h = hamiltonian(p, b).mat;
      const Matrix n = excitation_number(b).mat;
      worst = std::max(worst, (h * n - n * h).cwiseAbs().maxCoeff());
    }
    require(worst <= 1e-12, "[H, N] exceeded 1e-12");
    return bound("max commutator", worst, 1e-12);
  });

  report.run("closed-form spectrum vs eigensolver", [&] {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      SystemParams p;
      p.g = ug(rng);
      p.u0 = u10(rng);
      p.delta_c = u10(rng);
      p.eta = 0.0;
      for (const auto& block : numeric_spectrum(p, b)) {
        if (block.excitation < 1 || block.excitation > b.n_max) continue;
        const auto e = dressed_energy(block.excitation, p);
        worst = std::max(worst, std::abs(block.energies[0] - e.lower));
        worst = std::max(worst, std::abs(block.energies[1] - e.upper));
      }
    }
    require(worst <= 1e-10, "spectrum mismatch above 1e-10");
    return bound("max difference", worst, 1e-10);
  });

  report.run("generator preserves trace", [&] {
    SystemParams p;
    p.u0 = -5.0;
    p.delta_c = 2.0;
    p.omega_m = 0.2;
    const auto lv = build_liouvillian(p, b);
    std::normal_distribution<double> gauss;
    Matrix a(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    const double drift = std::abs(pbsim::apply(lv, rho).trace());
    require(drift <= 1e-12, "Tr(Lρ) above 1e-12");
    return bound("|Tr Lρ|", drift, 1e-12);
  });

  report.run("undriven system relaxes to |0,↑⟩", [&] {
    SystemParams p;
    p.g = 0.0;
    p.eta = 0.0;
    const auto rho = steady_state(p, b);
    const double dist = trace_distance(rho, pure_state(b, 0, Spin::up));
    require(dist <= 1e-10, "steady state is not the dark state");
    return bound("trace distance", dist, 1e-10);
  });

  report.run("driven empty cavity is coherent", [&] {
    SystemParams p;
    p.g = 0.0;
    const auto rho = steady_state(p, b);
    const double n_s = photon_number(rho);
    const double expected = 4.0 * p.eta * p.eta / (p.kappa * p.kappa);
    require(std::abs(n_s - expected) <= 1e-6, "photon number off the analytic value");
    require(std::abs(g2_zero(rho) - 1.0) <= 1e-6, "g2 of a coherent state must be 1");
    return "n_s " + format_double(n_s, 6) + ", g2 " + format_double(g2_zero(rho), 6);
  });

  report.run("optimal conditions null the two-photon amplitude", [&] {
    double worst = 0.0;
    std::uniform_real_distribution<double> u8(-8.0, 8.0), ug2(0.2, 3.0);
    for (int k = 0; k < 10; ++k) {
      SystemParams p;
      p.g = ug2(rng);
      p.u0 = u8(rng);
      p.delta_c = u8(rng);
      const auto amps = weak_drive_amplitudes(apply_interference(p, InterferenceMode::optimal));
      worst = std::max(worst, std::abs(amps.c2_up) / ((p.eta / p.kappa) * (p.eta / p.kappa)));
    }
    require(worst <= 1e-10, "two-photon amplitude above the nulling bound");
    return bound("max |c2|/(η/κ)²", worst, 1e-10);
  });

  report.run("regression series starts at g2(0)", [&] {
    SystemParams p;
    p.u0 = -5.0;
    p.delta_c = resonance_detuning(Branch::lower, p);
    p = apply_interference(p, InterferenceMode::optimal);
    const auto lv = build_liouvillian(p, b);
    const auto rho = steady_state(lv);
    const auto series = g2_tau(rho, lv, {0.0, 0.1});
    const double diff = std::abs(series.values[0] - series.g2_zero);
    require(diff <= 1e-8, "τ=0 sample disagrees with g2(0)");
    return bound("difference", diff, 1e-8);
  });

  report.run("steady state is stationary under propagation", [&] {
    SystemParams p;
    p.u0 = -5.0;
    p.delta_c = resonance_detuning(Branch::lower, p);
    p = apply_interference(p, InterferenceMode::optimal);
    const auto lv = build_liouvillian(p, b);
    const auto rho = steady_state(lv);
    const auto states = propagate(lv, rho, {0.0, 1.0});
    const double dist = trace_distance(states.back(), rho);
    require(dist <= 1e-8, "steady state drifted under propagation");
    return bound("trace distance", dist, 1e-8);
  });

  if (report.failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << report.failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon-blockade steady states, correlations and sweeps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct SubArgs {
    std::string config;
    std::vector<std::string> sets;
  };
  std::map<std::string, SubArgs> args;
  const auto add_common = [&](CLI::App* cmd) {
    auto& a = args[cmd->get_name()];
    cmd->add_option("config", a.config, "JSON config file");
    cmd->add_option("--set", a.sets, "override key=value (repeatable)");
  };
  add_common(app.add_subcommand("sweep", "run the configured parameter sweep"));
  add_common(app.add_subcommand("spectrum", "print the dressed-level table"));
  add_common(app.add_subcommand("optimum", "print the interference optimum"));
  add_common(app.add_subcommand("g2tau", "delay scan of the intensity correlation"));
  add_common(app.add_subcommand("dynamics", "photon-number time evolution"));
  app.add_subcommand("check", "run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "check") return run_check();
    const RunConfig cfg = load_config(args[name].config, args[name].sets);
    if (name == "sweep") return run_sweep_command(cfg, std::nullopt);
    if (name == "spectrum") return run_spectrum(cfg);
    if (name == "optimum") return run_optimum(cfg);
    if (name == "g2tau") return run_sweep_command(cfg, SweepMode::g2_tau);
    if (name == "dynamics") return run_sweep_command(cfg, SweepMode::dynamics);
    std::cerr << "unknown subcommand '" << name << "'\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
