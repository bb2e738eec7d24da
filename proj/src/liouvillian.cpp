#include "pbsim/liouvillian.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseLU>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbsim/errors.hpp"

namespace pbsim {

namespace {

using Triplet = Eigen::Triplet<Complex>;

// Adds coeff * (A X B) to the vectorized generator: with column-major
// stacking, the element X(r', c') feeds vec slot (c*dim + r) through
// A(r, r') B(c', c).
void add_product_term(std::vector<Triplet>& out, int dim, Complex coeff,
                      const Matrix& a, const Matrix& b) {
  for (int rp = 0; rp < dim; ++rp)
    for (int r = 0; r < dim; ++r) {
      const Complex av = a(r, rp);
      if (av == Complex(0.0, 0.0)) continue;
      for (int cp = 0; cp < dim; ++cp)
        for (int c = 0; c < dim; ++c) {
          const Complex bv = b(cp, c);
          if (bv == Complex(0.0, 0.0)) continue;
          out.emplace_back(c * dim + r, cp * dim + rp, coeff * av * bv);
        }
    }
}

void add_dissipator(std::vector<Triplet>& out, int dim, double rate,
                    const Matrix& op, const Matrix& id) {
  if (rate == 0.0) return;
  const Matrix op_dag = op.adjoint();
  const Matrix op_sq = op_dag * op;
  add_product_term(out, dim, Complex(rate, 0.0), op, op_dag);
  add_product_term(out, dim, Complex(-rate / 2.0, 0.0), op_sq, id);
  add_product_term(out, dim, Complex(-rate / 2.0, 0.0), id, op_sq);
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + Matrix(m.adjoint())); }

// Smallest-singular-value estimate of the factorized matrix via a few power
// iterations on (M† M)⁻¹; returns 0 when the factorization is unusable. An
// estimate near machine zero exposes a multidimensional generator kernel,
// which the residual check alone cannot see (every kernel mixture has zero
// residual).
double sigma_min_estimate(Eigen::SparseLU<Eigen::SparseMatrix<Complex>>& lu,
                          Eigen::Index rows, int iterations) {
  Vector v = Vector::Ones(rows);
  v.normalize();
  double sigma_min = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector w = lu.adjoint().solve(v);
    Vector u = lu.solve(w);
    const double len = u.norm();
    if (!(len > 0.0) || !u.allFinite()) return 0.0;
    sigma_min = 1.0 / std::sqrt(len);
    v = u / len;
  }
  return sigma_min;
}

}  // namespace

Vector vectorize(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvectorize(const Vector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw std::invalid_argument("unvectorize: length " + std::to_string(v.size()) +
                                " does not match dimension " + std::to_string(dim));
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Superoperator build_liouvillian(const SystemParams& p, const Basis& b) {
  p.validate();
  const int dim = b.dim;
  const Matrix h = hamiltonian(p, b).mat;
  const Matrix id = Matrix::Identity(dim, dim);

  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(dim) * dim * 12);
  const Complex i_unit(0.0, 1.0);
  add_product_term(trips, dim, -i_unit, h, id);  // -i H ρ
  add_product_term(trips, dim, i_unit, id, h);   // +i ρ H
  add_dissipator(trips, dim, p.kappa, cavity_annihilator(b).mat, id);
  add_dissipator(trips, dim, p.gamma_g, spin_lowering(b).mat, id);
  add_dissipator(trips, dim, p.gamma_d, spin_down_projector(b).mat, id);

  Superoperator lv{b, Eigen::SparseMatrix<Complex>(dim * dim, dim * dim)};
  lv.mat.setFromTriplets(trips.begin(), trips.end());
  lv.mat.makeCompressed();
  return lv;
}

Matrix apply(const Superoperator& lv, const Matrix& m) {
  const int dim = lv.basis.dim;
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("apply: matrix shape does not match the basis");
  return unvectorize(lv.mat * vectorize(m), dim);
}

DensityMatrix steady_state(const Superoperator& lv, const SteadyStateOptions& opts) {
  if (!(opts.tol > 0.0))
    throw std::invalid_argument("steady_state: tolerance must be positive");
  const int dim = lv.basis.dim;
  const int n = dim * dim;

  // Same generator with the first row traded for the trace constraint; the
  // right-hand side picks trace one.
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(lv.mat.nonZeros()) + dim);
  for (int k = 0; k < lv.mat.outerSize(); ++k)
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(lv.mat, k); it; ++it)
      if (it.row() != 0) trips.emplace_back(it.row(), it.col(), it.value());
  for (int j = 0; j < dim; ++j)
    trips.emplace_back(0, j * dim + j, Complex(1.0, 0.0));
  Eigen::SparseMatrix<Complex> m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success)
    throw DegenerateSteadyStateError("steady_state: factorization failed",
                                     std::numeric_limits<double>::infinity());

  const double m_norm = m.norm();
  const double sigma_min = sigma_min_estimate(lu, n, 4);
  if (!(sigma_min > 1e-11 * m_norm))
    throw DegenerateSteadyStateError(
        "steady_state: generator kernel is not one-dimensional",
        sigma_min > 0.0 ? m_norm / sigma_min
                        : std::numeric_limits<double>::infinity());

  Vector rhs = Vector::Zero(n);
  rhs(0) = Complex(1.0, 0.0);
  Vector x = lu.solve(rhs);
  x += lu.solve(Vector(rhs - m * x));  // one round of iterative refinement

  const double condition = m_norm / sigma_min;
  Matrix rho = hermitize(unvectorize(x, dim));
  const double tr = rho.trace().real();
  if (!(std::abs(tr) > 1e-14) || !rho.allFinite())
    throw DegenerateSteadyStateError("steady_state: solution has no usable trace",
                                     condition);
  rho /= tr;

  const double residual = (lv.mat * vectorize(rho)).norm();
  const double scale = std::max(1.0, lv.mat.norm());
  if (!(residual <= opts.tol * scale))
    throw DegenerateSteadyStateError(
        "steady_state: residual " + std::to_string(residual) +
            " above tolerance, kernel is likely degenerate",
        condition);

  const double min_eig = min_eigenvalue(rho);
  if (min_eig < -1e-8)
    throw DegenerateSteadyStateError(
        "steady_state: solution not positive semidefinite (min eigenvalue " +
            std::to_string(min_eig) + ")",
        condition);

  return DensityMatrix{lv.basis, std::move(rho)};
}

DensityMatrix steady_state(const SystemParams& p, const Basis& b,
                           const SteadyStateOptions& opts) {
  return steady_state(build_liouvillian(p, b), opts);
}

namespace {

struct Trajectory {
  std::vector<Vector> states;
  std::vector<double> photons;
};

Trajectory run_fixed_step(const Eigen::SparseMatrix<Complex>& l, const Vector& v0,
                          const std::vector<double>& times, double h,
                          const Eigen::VectorXd& photon_weights, int dim) {
  Trajectory out;
  out.states.reserve(times.size());
  out.photons.reserve(times.size());
  Vector v = v0;
  Vector k1(v.size()), k2(v.size()), k3(v.size()), k4(v.size()), tmp(v.size());
  double t_prev = 0.0;
  for (double t : times) {
    const double dt = t - t_prev;
    if (dt > 0.0) {
      const auto steps = static_cast<long>(std::ceil(dt / h - 1e-12));
      const double hl = dt / static_cast<double>(std::max(1L, steps));
      for (long s = 0; s < std::max(1L, steps); ++s) {
        k1.noalias() = l * v;
        tmp = v + (hl / 2.0) * k1;
        k2.noalias() = l * tmp;
        tmp = v + (hl / 2.0) * k2;
        k3.noalias() = l * tmp;
        tmp = v + hl * k3;
        k4.noalias() = l * tmp;
        v += (hl / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    }
    double photon = 0.0;
    for (int j = 0; j < dim; ++j) photon += photon_weights(j) * v(j * dim + j).real();
    out.states.push_back(v);
    out.photons.push_back(photon);
    t_prev = t;
  }
  return out;
}

}  // namespace

std::vector<DensityMatrix> propagate(const Superoperator& lv, const DensityMatrix& rho0,
                                     const std::vector<double>& times,
                                     const PropagateOptions& opts) {
  if (!(opts.step > 0.0) || !(opts.traj_tol > 0.0) || !(opts.min_step > 0.0))
    throw std::invalid_argument("propagate: step, traj_tol and min_step must be positive");
  if (rho0.basis != lv.basis)
    throw std::invalid_argument("propagate: initial state basis does not match generator");
  double prev = 0.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0 || t < prev)
      throw std::invalid_argument(
          "propagate: times must be finite, non-negative and non-decreasing");
    prev = t;
  }
  if (std::abs(rho0.mat.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho0.mat.trace().imag()) > 1e-8)
    throw std::invalid_argument("propagate: initial state must have unit trace");
  if (times.empty()) return {};

  const int dim = lv.basis.dim;
  Eigen::VectorXd photon_weights(dim);
  for (int j = 0; j < dim; ++j) photon_weights(j) = lv.basis.photon(j);

  const Vector v0 = vectorize(rho0.mat);
  double h = opts.step;
  Trajectory coarse = run_fixed_step(lv.mat, v0, times, h, photon_weights, dim);
  Trajectory fine;
  while (true) {
    fine = run_fixed_step(lv.mat, v0, times, h / 2.0, photon_weights, dim);
    double diff = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (!std::isfinite(fine.photons[i]) || !std::isfinite(coarse.photons[i]))
        finite = false;
      diff = std::max(diff, std::abs(fine.photons[i] - coarse.photons[i]));
    }
    if (finite && diff <= opts.traj_tol) break;
    coarse = std::move(fine);
    h /= 2.0;
    if (h / 2.0 < opts.min_step)
      throw StiffnessError(
          "propagate: step underflowed below " + std::to_string(opts.min_step) +
          " before the photon-number trajectory converged");
  }

  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    Matrix rho = hermitize(unvectorize(fine.states[i], dim));
    const double trace_err = std::abs(rho.trace().real() - 1.0);
    const double min_eig = min_eigenvalue(rho);
    if (trace_err > 1e-8 || min_eig < -1e-7)
      throw StiffnessError(
          "propagate: integration produced an unphysical state at t = " +
          std::to_string(times[i]) + " (trace error " + std::to_string(trace_err) +
          ", min eigenvalue " + std::to_string(min_eig) + ")");
    out.push_back(DensityMatrix{lv.basis, std::move(rho)});
  }
  return out;
}

}  // namespace pbsim
