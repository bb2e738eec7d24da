#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pbsim/model.hpp"

namespace pbsim {

// What each grid row computes:
//   map_g2_ns        g²(0) and n_s on a (delta_c, u0) grid
//   cut              g²(0) and n_s along one axis (delta_c, u0 or g)
//   optimum_vs_u0    per-u0 minimum of g²(0) over a delta_c search grid
//   g_scan_qi_vs_jc  per-g optima for the interference curve (u0 = ratio·g)
//                    and the bare-coupling baseline (u0 = 0, no microwave);
//                    the delta_c axis and fixed.u0 are in units of g
//   g2_tau           delay scan of g²(τ) at the fixed parameter point
//   dynamics         photon number vs time from |0,↑⟩
enum class SweepMode { map_g2_ns, cut, optimum_vs_u0, g_scan_qi_vs_jc, g2_tau, dynamics };

// optimal: recompute (θ, Ωm) from the nulling conditions at each point's
// delta_c; off: microwave disabled; manual: use fixed.theta / fixed.omega_m.
enum class InterferenceMode { optimal, off, manual };

std::string to_string(SweepMode mode);
std::string to_string(InterferenceMode mode);
SweepMode sweep_mode_from_string(const std::string& s);
InterferenceMode interference_from_string(const std::string& s);

struct Axis {
  std::string name;  // delta_c, u0, g, or t
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  std::vector<double> grid() const;  // linear, endpoints exact
};

struct SolverSettings {
  int n_max = 8;
  double steady_tol = 1e-10;
  double time_step = 1e-3;
  double traj_tol = 1e-8;
  int workers = 0;  // 0: PBSIM_THREADS environment variable, else all cores
};

struct SweepSpec {
  SystemParams fixed;
  SweepMode mode = SweepMode::cut;
  InterferenceMode interference = InterferenceMode::optimal;
  std::vector<Axis> axes;  // empty: filled from default_axes(mode)
  SolverSettings solver;

  std::vector<std::string> issues() const;
  void validate() const;  // throws ValidationError with every issue
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // failed cells hold NaN
  std::vector<std::string> row_errors;    // one code per row, empty on success
  std::string metadata_json;              // parameter echo, solver settings,
                                          // version, per-row error codes

  std::size_t failed_rows() const;
  std::size_t column_index(const std::string& name) const;
};

// Evaluates every grid point (independent points in parallel), never aborting
// on per-point solver failures: failed rows carry NaN outputs and an error
// code. Results are identical for any worker count.
SweepResult run_sweep(const SweepSpec& spec);

struct Optimum {
  std::size_t row = 0;
  double value = 0.0;
};

// Minimum of `column` over successful rows; exact ties resolve toward the
// smallest |delta_c| when that column exists, then the lowest row index.
// Throws EmptyResultError when no row succeeded.
Optimum find_optimum(const SweepResult& result, const std::string& column);

// The interference setting folded into a parameter point.
SystemParams apply_interference(SystemParams p, InterferenceMode mode);

// requested if > 0, else PBSIM_THREADS, else hardware concurrency (≥ 1).
int resolve_workers(int requested);

// Runs fn(0..n-1) on a pool pulling indices from a shared counter; the first
// exception is rethrown on the caller after all workers join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

std::vector<Axis> default_axes(SweepMode mode);

}  // namespace pbsim
