#include "pbsim/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "pbsim/errors.hpp"
#include "pbsim/hilbert.hpp"
#include "pbsim/interference.hpp"
#include "pbsim/liouvillian.hpp"
#include "pbsim/observables.hpp"
#include "pbsim/version.hpp"

namespace pbsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
using Json = nlohmann::ordered_json;

std::string error_code(const std::exception& e) {
  if (dynamic_cast<const DegenerateSteadyStateError*>(&e)) return "degenerate_steady_state";
  if (dynamic_cast<const ResonanceDegeneracyError*>(&e)) return "resonance_degeneracy";
  if (dynamic_cast<const StiffnessError*>(&e)) return "stiffness";
  if (dynamic_cast<const UndefinedCorrelationError*>(&e)) return "undefined_correlation";
  if (dynamic_cast<const EmptyResultError*>(&e)) return "empty_result";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  return "error";
}

void set_param(SystemParams& p, const std::string& name, double v) {
  if (name == "delta_c")
    p.delta_c = v;
  else if (name == "u0")
    p.u0 = v;
  else if (name == "g")
    p.g = v;
  else
    throw std::logic_error("set_param: axis '" + name + "' is not a parameter");
}

struct PointResult {
  double n_s = kNaN;
  double g2 = kNaN;
  double theta = kNaN;
  double omega = kNaN;
  double null_ratio = kNaN;  // |c2_up| / (eta/kappa)² at the nulling check
  std::string error;
};

PointResult eval_steady(SystemParams p, InterferenceMode mode, const Basis& b,
                        const SolverSettings& s, bool spot_check) {
  PointResult r;
  try {
    p = apply_interference(p, mode);
    const auto rho = steady_state(p, b, SteadyStateOptions{s.steady_tol});
    r.n_s = photon_number(rho);
    r.g2 = g2_zero(rho);
    r.theta = p.theta;
    r.omega = p.omega_m;
  } catch (const std::exception& e) {
    r.error = error_code(e);
    return r;
  }
  if (spot_check && mode == InterferenceMode::optimal) {
    try {
      const auto amps = weak_drive_amplitudes(p);
      r.null_ratio = std::abs(amps.c2_up) / ((p.eta / p.kappa) * (p.eta / p.kappa));
    } catch (const std::exception&) {
      // leave the ratio unset; the check is advisory
    }
  }
  return r;
}

// Deterministic ~5% sample of m points for the interference nulling check.
std::vector<char> pick_sample(std::size_t m) {
  std::vector<char> mask(m, 0);
  if (m == 0) return mask;
  const std::size_t k = std::max<std::size_t>(1, (m + 19) / 20);
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937 rng(0x51a7u);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t i = 0; i < k; ++i) mask[idx[i]] = 1;
  return mask;
}

struct NullCheck {
  std::size_t sampled = 0;
  std::size_t evaluated = 0;
  double max_ratio = 0.0;
};

NullCheck reduce_null_check(const std::vector<PointResult>& pts,
                            const std::vector<char>& mask) {
  NullCheck nc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!mask[i]) continue;
    ++nc.sampled;
    if (std::isnan(pts[i].null_ratio)) continue;
    ++nc.evaluated;
    nc.max_ratio = std::max(nc.max_ratio, pts[i].null_ratio);
  }
  return nc;
}

// Best inner index by g2 among successful points; ties toward small |delta_c|.
long argmin_g2(const std::vector<PointResult>& pts, std::size_t begin, std::size_t end,
               const std::vector<double>& delta_cs) {
  long best = -1;
  for (std::size_t i = begin; i < end; ++i) {
    if (!pts[i].error.empty() || std::isnan(pts[i].g2)) continue;
    if (best < 0 || pts[i].g2 < pts[best].g2 ||
        (pts[i].g2 == pts[best].g2 &&
         std::abs(delta_cs[i - begin]) < std::abs(delta_cs[best - begin])))
      best = static_cast<long>(i);
  }
  return best;
}

Json params_json(const SystemParams& p) {
  Json j;
  j["g"] = p.g;
  j["u0"] = p.u0;
  j["delta_c"] = p.delta_c;
  j["delta_a"] = p.delta_a ? Json(*p.delta_a) : Json(nullptr);
  j["eta"] = p.eta;
  j["omega_m"] = p.omega_m;
  j["theta"] = p.theta;
  j["kappa"] = p.kappa;
  j["gamma_g"] = p.gamma_g;
  j["gamma_d"] = p.gamma_d;
  j["kappa_hz"] = p.kappa_hz ? Json(*p.kappa_hz) : Json(nullptr);
  return j;
}

std::string build_metadata(const SweepSpec& sp, const std::vector<std::string>& columns,
                           const std::vector<std::vector<double>>& rows,
                           const std::vector<std::string>& row_errors,
                           const NullCheck* nc) {
  Json meta;
  meta["version"] = kVersion;
  meta["mode"] = to_string(sp.mode);
  meta["interference"] = to_string(sp.interference);
  meta["params"] = params_json(sp.fixed);
  meta["axes"] = Json::array();
  for (const auto& ax : sp.axes)
    meta["axes"].push_back(
        Json{{"name", ax.name}, {"min", ax.min}, {"max", ax.max}, {"count", ax.count}});
  meta["solver"] = Json{{"n_max", sp.solver.n_max},
                        {"steady_tol", sp.solver.steady_tol},
                        {"time_step", sp.solver.time_step},
                        {"traj_tol", sp.solver.traj_tol},
                        {"workers", sp.solver.workers}};
  meta["columns"] = columns;
  meta["row_count"] = rows.size();
  std::size_t failed = 0;
  Json errs = Json::object();
  for (std::size_t i = 0; i < row_errors.size(); ++i)
    if (!row_errors[i].empty()) {
      ++failed;
      errs[std::to_string(i)] = row_errors[i];
    }
  meta["failed_rows"] = failed;
  meta["row_errors"] = errs;
  if (nc)
    meta["interference_null_check"] = Json{{"sampled", nc->sampled},
                                           {"evaluated", nc->evaluated},
                                           {"max_ratio", nc->max_ratio}};
  else
    meta["interference_null_check"] = nullptr;
  return meta.dump(2);
}

SweepResult run_map(const SweepSpec& sp, const Basis& b) {
  const auto g0 = sp.axes[0].grid();
  const auto g1 = sp.axes[1].grid();
  const std::size_t n1 = g1.size();
  const std::size_t m = g0.size() * n1;
  const auto mask = sp.interference == InterferenceMode::optimal
                        ? pick_sample(m)
                        : std::vector<char>(m, 0);
  std::vector<PointResult> pts(m);
  parallel_for(m, sp.solver.workers, [&](std::size_t i) {
    SystemParams p = sp.fixed;
    set_param(p, sp.axes[0].name, g0[i / n1]);
    set_param(p, sp.axes[1].name, g1[i % n1]);
    pts[i] = eval_steady(p, sp.interference, b, sp.solver, mask[i]);
  });

  SweepResult out;
  out.columns = {sp.axes[0].name, sp.axes[1].name, "n_s", "g2_0", "theta_opt",
                 "omega_m_opt"};
  out.rows.reserve(m);
  out.row_errors.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = pts[i];
    out.rows.push_back({g0[i / n1], g1[i % n1], r.n_s, r.g2, r.theta, r.omega});
    out.row_errors.push_back(r.error);
  }
  const auto nc = reduce_null_check(pts, mask);
  out.metadata_json = build_metadata(
      sp, out.columns, out.rows, out.row_errors,
      sp.interference == InterferenceMode::optimal ? &nc : nullptr);
  return out;
}

SweepResult run_cut(const SweepSpec& sp, const Basis& b) {
  const auto grid = sp.axes[0].grid();
  const std::size_t m = grid.size();
  const auto mask = sp.interference == InterferenceMode::optimal
                        ? pick_sample(m)
                        : std::vector<char>(m, 0);
  std::vector<PointResult> pts(m);
  std::vector<SystemParams> point_params(m);
  for (std::size_t i = 0; i < m; ++i) {
    SystemParams p = sp.fixed;
    set_param(p, sp.axes[0].name, grid[i]);
    point_params[i] = p;
  }
  parallel_for(m, sp.solver.workers, [&](std::size_t i) {
    pts[i] = eval_steady(point_params[i], sp.interference, b, sp.solver, mask[i]);
  });

  SweepResult out;
  out.columns = {"delta_c", "u0", "g", "n_s", "g2_0", "theta_opt", "omega_m_opt"};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = point_params[i];
    const auto& r = pts[i];
    out.rows.push_back({p.delta_c, p.u0, p.g, r.n_s, r.g2, r.theta, r.omega});
    out.row_errors.push_back(r.error);
  }
  const auto nc = reduce_null_check(pts, mask);
  out.metadata_json = build_metadata(
      sp, out.columns, out.rows, out.row_errors,
      sp.interference == InterferenceMode::optimal ? &nc : nullptr);
  return out;
}

SweepResult run_optimum_vs_u0(const SweepSpec& sp, const Basis& b) {
  const auto u0s = sp.axes[0].grid();
  const auto dcs = sp.axes[1].grid();
  const std::size_t n1 = dcs.size();
  const std::size_t m = u0s.size() * n1;
  const auto mask = sp.interference == InterferenceMode::optimal
                        ? pick_sample(m)
                        : std::vector<char>(m, 0);
  std::vector<PointResult> pts(m);
  parallel_for(m, sp.solver.workers, [&](std::size_t i) {
    SystemParams p = sp.fixed;
    p.u0 = u0s[i / n1];
    p.delta_c = dcs[i % n1];
    pts[i] = eval_steady(p, sp.interference, b, sp.solver, mask[i]);
  });

  SweepResult out;
  out.columns = {"u0", "delta_c", "n_s", "g2_0", "theta_opt", "omega_m_opt"};
  for (std::size_t i0 = 0; i0 < u0s.size(); ++i0) {
    const long best = argmin_g2(pts, i0 * n1, (i0 + 1) * n1, dcs);
    if (best < 0) {
      out.rows.push_back({u0s[i0], kNaN, kNaN, kNaN, kNaN, kNaN});
      out.row_errors.push_back("empty_result");
      continue;
    }
    const auto& r = pts[best];
    out.rows.push_back(
        {u0s[i0], dcs[best % n1], r.n_s, r.g2, r.theta, r.omega});
    out.row_errors.push_back("");
  }
  const auto nc = reduce_null_check(pts, mask);
  out.metadata_json = build_metadata(
      sp, out.columns, out.rows, out.row_errors,
      sp.interference == InterferenceMode::optimal ? &nc : nullptr);
  return out;
}

SweepResult run_g_scan(const SweepSpec& sp, const Basis& b) {
  const auto gs = sp.axes[0].grid();
  const auto xs = sp.axes[1].grid();  // delta_c in units of g
  const std::size_t n1 = xs.size();
  const std::size_t m = gs.size() * 2 * n1;  // two curves per g
  const auto mask = sp.interference == InterferenceMode::optimal
                        ? pick_sample(m)
                        : std::vector<char>(m, 0);
  std::vector<PointResult> pts(m);
  parallel_for(m, sp.solver.workers, [&](std::size_t i) {
    const std::size_t i0 = i / (2 * n1);
    const bool baseline = (i / n1) % 2 == 1;  // second half of each g block
    const double gv = gs[i0];
    SystemParams p = sp.fixed;
    p.g = gv;
    p.delta_c = xs[i % n1] * gv;
    InterferenceMode mode = sp.interference;
    if (baseline) {
      p.u0 = 0.0;
      mode = InterferenceMode::off;
    } else {
      p.u0 = sp.fixed.u0 * gv;  // fixed.u0 is the ratio U0/g
    }
    pts[i] = eval_steady(p, mode, b, sp.solver, mask[i]);
  });

  SweepResult out;
  out.columns = {"g", "u0", "delta_c", "n_s", "g2_0", "theta_opt", "omega_m_opt"};
  std::vector<double> dcs(n1);
  for (std::size_t i0 = 0; i0 < gs.size(); ++i0) {
    const double gv = gs[i0];
    for (std::size_t j = 0; j < n1; ++j) dcs[j] = xs[j] * gv;
    for (int curve = 0; curve < 2; ++curve) {
      const std::size_t begin = (i0 * 2 + curve) * n1;
      const long best = argmin_g2(pts, begin, begin + n1, dcs);
      const double u0v = curve == 0 ? sp.fixed.u0 * gv : 0.0;
      if (best < 0) {
        out.rows.push_back({gv, u0v, kNaN, kNaN, kNaN, kNaN, kNaN});
        out.row_errors.push_back("empty_result");
        continue;
      }
      const auto& r = pts[best];
      out.rows.push_back({gv, u0v, dcs[best - begin], r.n_s, r.g2, r.theta, r.omega});
      out.row_errors.push_back("");
    }
  }
  const auto nc = reduce_null_check(pts, mask);
  out.metadata_json = build_metadata(
      sp, out.columns, out.rows, out.row_errors,
      sp.interference == InterferenceMode::optimal ? &nc : nullptr);
  return out;
}

SweepResult run_trajectory_mode(const SweepSpec& sp, const Basis& b) {
  const auto times = sp.axes[0].grid();
  const bool delays = sp.mode == SweepMode::g2_tau;
  const bool with_us = sp.fixed.kappa_hz.has_value();
  SweepResult out;
  const std::string base = delays ? "tau" : "t";
  out.columns = {base + "_kappa"};
  if (with_us) out.columns.push_back(base + "_us");
  out.columns.push_back(delays ? "g2_tau" : "n");

  std::vector<double> values(times.size(), kNaN);
  std::string error;
  NullCheck nc;
  bool checked = false;
  try {
    SystemParams p = apply_interference(sp.fixed, sp.interference);
    const PropagateOptions popts{sp.solver.time_step, sp.solver.traj_tol, 1e-9};
    if (delays) {
      const auto lv = build_liouvillian(p, b);
      const auto rho_s = steady_state(lv, SteadyStateOptions{sp.solver.steady_tol});
      values = g2_tau(rho_s, lv, times, popts).values;
    } else {
      values = photon_dynamics(p, b, pure_state(b, 0, Spin::up), times, popts);
    }
    if (sp.interference == InterferenceMode::optimal) {
      try {
        const auto amps = weak_drive_amplitudes(p);
        nc.sampled = nc.evaluated = 1;
        nc.max_ratio = std::abs(amps.c2_up) / ((p.eta / p.kappa) * (p.eta / p.kappa));
        checked = true;
      } catch (const std::exception&) {
        nc.sampled = 1;
        checked = true;
      }
    }
  } catch (const std::exception& e) {
    error = error_code(e);
  }

  for (std::size_t i = 0; i < times.size(); ++i) {
    std::vector<double> row = {times[i]};
    if (with_us) row.push_back(times[i] * 1e6 / *sp.fixed.kappa_hz);
    row.push_back(values[i]);
    out.rows.push_back(std::move(row));
    out.row_errors.push_back(error);
  }
  out.metadata_json =
      build_metadata(sp, out.columns, out.rows, out.row_errors, checked ? &nc : nullptr);
  return out;
}

}  // namespace

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::map_g2_ns: return "map_g2_ns";
    case SweepMode::cut: return "cut";
    case SweepMode::optimum_vs_u0: return "optimum_vs_u0";
    case SweepMode::g_scan_qi_vs_jc: return "g_scan_qi_vs_jc";
    case SweepMode::g2_tau: return "g2_tau";
    case SweepMode::dynamics: return "dynamics";
  }
  return "unknown";
}

std::string to_string(InterferenceMode mode) {
  switch (mode) {
    case InterferenceMode::optimal: return "optimal";
    case InterferenceMode::off: return "off";
    case InterferenceMode::manual: return "manual";
  }
  return "unknown";
}

SweepMode sweep_mode_from_string(const std::string& s) {
  if (s == "map_g2_ns") return SweepMode::map_g2_ns;
  if (s == "cut") return SweepMode::cut;
  if (s == "optimum_vs_u0") return SweepMode::optimum_vs_u0;
  if (s == "g_scan_qi_vs_jc") return SweepMode::g_scan_qi_vs_jc;
  if (s == "g2_tau") return SweepMode::g2_tau;
  if (s == "dynamics") return SweepMode::dynamics;
  throw std::invalid_argument("unknown sweep mode '" + s + "'");
}

InterferenceMode interference_from_string(const std::string& s) {
  if (s == "optimal") return InterferenceMode::optimal;
  if (s == "off") return InterferenceMode::off;
  if (s == "manual") return InterferenceMode::manual;
  throw std::invalid_argument("unknown interference setting '" + s + "'");
}

std::vector<double> Axis::grid() const {
  if (count < 2) throw std::invalid_argument("Axis::grid: count must be ≥ 2");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = std::lerp(min, max, static_cast<double>(i) / (count - 1));
  return out;
}

std::vector<std::string> SweepSpec::issues() const {
  auto out = fixed.issues();
  if (solver.n_max < 1) out.push_back("solver.n_max must be ≥ 1");
  if (!(solver.steady_tol > 0)) out.push_back("solver.steady_tol must be positive");
  if (!(solver.time_step > 0)) out.push_back("solver.time_step must be positive");
  if (!(solver.traj_tol > 0)) out.push_back("solver.traj_tol must be positive");
  if (solver.workers < 0) out.push_back("solver.workers must be ≥ 0");

  if (axes.empty()) return out;  // defaults will be applied

  for (const auto& ax : axes) {
    if (ax.name != "delta_c" && ax.name != "u0" && ax.name != "g" && ax.name != "t")
      out.push_back("axis name '" + ax.name + "' is not one of delta_c, u0, g, t");
    if (ax.count < 2)
      out.push_back("axis '" + ax.name + "' needs count ≥ 2");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max) || !(ax.min < ax.max))
      out.push_back("axis '" + ax.name + "' needs finite min < max");
  }

  const auto expect = [&](std::initializer_list<const char*> names) {
    if (axes.size() != names.size()) {
      out.push_back("mode " + to_string(mode) + " needs exactly " +
                    std::to_string(names.size()) + " axes");
      return;
    }
    std::size_t i = 0;
    for (const char* n : names) {
      if (axes[i].name != n)
        out.push_back("mode " + to_string(mode) + " needs axis " +
                      std::to_string(i) + " to be '" + n + "'");
      ++i;
    }
  };
  switch (mode) {
    case SweepMode::map_g2_ns:
      if (axes.size() != 2 ||
          !((axes[0].name == "delta_c" && axes[1].name == "u0") ||
            (axes[0].name == "u0" && axes[1].name == "delta_c")))
        out.push_back("mode map_g2_ns needs axes delta_c and u0");
      break;
    case SweepMode::cut:
      if (axes.size() != 1 || axes[0].name == "t")
        out.push_back("mode cut needs one axis out of delta_c, u0, g");
      break;
    case SweepMode::optimum_vs_u0:
      expect({"u0", "delta_c"});
      break;
    case SweepMode::g_scan_qi_vs_jc:
      expect({"g", "delta_c"});
      if (axes.size() == 2 && axes[0].name == "g" && !(axes[0].min > 0))
        out.push_back("mode g_scan_qi_vs_jc needs the g axis to start above 0");
      break;
    case SweepMode::g2_tau:
      expect({"t"});
      if (axes.size() == 1 && axes[0].min != 0.0)
        out.push_back("mode g2_tau needs the delay axis to start at 0");
      break;
    case SweepMode::dynamics:
      expect({"t"});
      if (axes.size() == 1 && axes[0].min < 0.0)
        out.push_back("mode dynamics needs non-negative times");
      break;
  }
  return out;
}

void SweepSpec::validate() const {
  auto problems = issues();
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::size_t SweepResult::failed_rows() const {
  std::size_t n = 0;
  for (const auto& e : row_errors)
    if (!e.empty()) ++n;
  return n;
}

std::size_t SweepResult::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end())
    throw std::invalid_argument("no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepSpec sp = spec;
  if (sp.axes.empty()) sp.axes = default_axes(sp.mode);
  sp.validate();
  const Basis b(sp.solver.n_max);
  switch (sp.mode) {
    case SweepMode::map_g2_ns: return run_map(sp, b);
    case SweepMode::cut: return run_cut(sp, b);
    case SweepMode::optimum_vs_u0: return run_optimum_vs_u0(sp, b);
    case SweepMode::g_scan_qi_vs_jc: return run_g_scan(sp, b);
    case SweepMode::g2_tau:
    case SweepMode::dynamics: return run_trajectory_mode(sp, b);
  }
  throw std::logic_error("run_sweep: unhandled mode");
}

Optimum find_optimum(const SweepResult& result, const std::string& column) {
  const std::size_t col = result.column_index(column);
  long dc_col = -1;
  if (std::find(result.columns.begin(), result.columns.end(), "delta_c") !=
      result.columns.end())
    dc_col = static_cast<long>(result.column_index("delta_c"));

  long best = -1;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (!result.row_errors[i].empty()) continue;
    const double v = result.rows[i][col];
    if (std::isnan(v)) continue;
    if (best < 0 || v < result.rows[best][col]) {
      best = static_cast<long>(i);
    } else if (v == result.rows[best][col] && dc_col >= 0 &&
               std::abs(result.rows[i][dc_col]) <
                   std::abs(result.rows[best][dc_col])) {
      best = static_cast<long>(i);
    }
  }
  if (best < 0)
    throw EmptyResultError("find_optimum: no successful rows in column '" + column + "'");
  return Optimum{static_cast<std::size_t>(best), result.rows[best][col]};
}

SystemParams apply_interference(SystemParams p, InterferenceMode mode) {
  switch (mode) {
    case InterferenceMode::optimal: {
      const auto c = optimal_conditions(p);
      p.theta = c.theta;
      p.omega_m = c.omega_m;
      break;
    }
    case InterferenceMode::off:
      p.omega_m = 0.0;
      p.theta = 0.0;
      break;
    case InterferenceMode::manual:
      break;
  }
  return p;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PBSIM_THREADS")) {
    char* tail = nullptr;
    const long v = std::strtol(env, &tail, 10);
    if (tail != env && *tail == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const int w = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(workers)), n));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto body = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (int t = 0; t < w; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::vector<Axis> default_axes(SweepMode mode) {
  switch (mode) {
    case SweepMode::map_g2_ns:
      return {{"delta_c", -8.0, 8.0, 161}, {"u0", -5.0, 5.0, 101}};
    case SweepMode::cut:
      return {{"delta_c", -8.0, 8.0, 401}};
    case SweepMode::optimum_vs_u0:
      // red-detuned probe side only: the (u0, delta_c) -> (-u0, -delta_c)
      // mirror symmetry would otherwise hide the Stark-shift asymmetry
      return {{"u0", -5.0, 5.0, 21}, {"delta_c", 0.0, 8.0, 801}};
    case SweepMode::g_scan_qi_vs_jc:
      return {{"g", 0.2, 2.0, 19}, {"delta_c", 0.0, 8.0, 401}};
    case SweepMode::g2_tau:
      return {{"t", 0.0, 50.0, 501}};
    case SweepMode::dynamics:
      return {{"t", 0.0, 30.0, 601}};
  }
  throw std::logic_error("default_axes: unhandled mode");
}

}  // namespace pbsim
