#pragma once

#include <Eigen/SparseCore>

#include <vector>

#include "pbsim/hilbert.hpp"
#include "pbsim/model.hpp"

namespace pbsim {

// Lindblad generator in vectorized (column-major) form: a sparse dim² × dim²
// matrix acting on vec(ρ).
struct Superoperator {
  Basis basis;
  Eigen::SparseMatrix<Complex> mat;
};

// Column-major stacking of a dim × dim matrix into a dim² vector, and back.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, int dim);

// dρ/dt = -i[H,ρ] + (κ/2)D[a]ρ + (γg/2)D[σ-]ρ + (γd/2)D[σ+σ-]ρ,
// with D[o]ρ = 2 o ρ o† - o†o ρ - ρ o†o.
Superoperator build_liouvillian(const SystemParams& p, const Basis& b);

// Applies the generator to a (not necessarily physical) matrix.
Matrix apply(const Superoperator& lv, const Matrix& m);

struct SteadyStateOptions {
  // Accept ρ when ‖L vec(ρ)‖ ≤ tol · max(1, ‖L‖_F).
  double tol = 1e-10;
};

// Unique trace-one kernel element of the generator, found by replacing one
// row of L with the trace constraint and solving by sparse LU with one round
// of iterative refinement. The result is hermitized and normalized before the
// residual and positivity checks. Throws DegenerateSteadyStateError when the
// factorization fails, the residual stays above tolerance, or the solution is
// not positive semidefinite (min eigenvalue < -1e-8) — all symptoms of a
// degenerate kernel.
DensityMatrix steady_state(const Superoperator& lv, const SteadyStateOptions& opts = {});
DensityMatrix steady_state(const SystemParams& p, const Basis& b,
                           const SteadyStateOptions& opts = {});

struct PropagateOptions {
  double step = 1e-3;      // initial fixed RK4 step
  double traj_tol = 1e-8;  // photon-number agreement required between a run
                           // and its half-step refinement
  double min_step = 1e-9;  // give up (StiffnessError) below this step
};

// Integrates dρ/dt = Lρ from ρ0 with classic fixed-step RK4, landing exactly
// on every requested time. The whole trajectory is re-run with half the step
// until the photon-number record at the requested times changes by less than
// traj_tol; the finer run is returned. Outputs are hermitized and validated
// (|tr - 1| ≤ 1e-8, min eigenvalue ≥ -1e-7). `times` must be finite,
// non-negative and non-decreasing.
std::vector<DensityMatrix> propagate(const Superoperator& lv, const DensityMatrix& rho0,
                                     const std::vector<double>& times,
                                     const PropagateOptions& opts = {});

}  // namespace pbsim
