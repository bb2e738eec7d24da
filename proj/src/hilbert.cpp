#include "pbsim/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace pbsim {

Basis::Basis(int n_max_photons) : n_max(n_max_photons), dim(2 * (n_max_photons + 1)) {
  if (n_max_photons < 1)
    throw std::invalid_argument("basis requires n_max >= 1, got " +
                                std::to_string(n_max_photons));
}

Operator cavity_annihilator(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int n = 1; n <= b.n_max; ++n)
    for (Spin s : {Spin::up, Spin::down})
      m(b.index(n - 1, s), b.index(n, s)) = std::sqrt(static_cast<double>(n));
  return {b, std::move(m)};
}

Operator cavity_creator(const Basis& b) {
  auto a = cavity_annihilator(b);
  return {b, a.mat.adjoint()};
}

Operator number_operator(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int i = 0; i < b.dim; ++i) m(i, i) = b.photon(i);
  return {b, std::move(m)};
}

Operator spin_lowering(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int n = 0; n <= b.n_max; ++n)
    m(b.index(n, Spin::up), b.index(n, Spin::down)) = 1.0;
  return {b, std::move(m)};
}

Operator spin_raising(const Basis& b) {
  auto sm = spin_lowering(b);
  return {b, sm.mat.adjoint()};
}

Operator spin_up_projector(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int n = 0; n <= b.n_max; ++n) {
    const int i = b.index(n, Spin::up);
    m(i, i) = 1.0;
  }
  return {b, std::move(m)};
}

Operator spin_down_projector(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int n = 0; n <= b.n_max; ++n) {
    const int i = b.index(n, Spin::down);
    m(i, i) = 1.0;
  }
  return {b, std::move(m)};
}

Operator identity_operator(const Basis& b) {
  return {b, Matrix::Identity(b.dim, b.dim)};
}

Complex expectation(const Operator& op, const DensityMatrix& rho) {
  if (op.basis != rho.basis)
    throw std::invalid_argument("expectation: operator basis (n_max " +
                                std::to_string(op.basis.n_max) +
                                ") does not match state basis (n_max " +
                                std::to_string(rho.basis.n_max) + ")");
  return (op.mat * rho.mat).trace();
}

DensityMatrix pure_state(const Basis& b, int n, Spin s) {
  if (n < 0 || n > b.n_max)
    throw std::invalid_argument("pure_state: photon number " + std::to_string(n) +
                                " outside [0, " + std::to_string(b.n_max) + "]");
  Matrix m = Matrix::Zero(b.dim, b.dim);
  const int i = b.index(n, s);
  m(i, i) = 1.0;
  return {b, std::move(m)};
}

DensityCheck check_density(const DensityMatrix& rho) {
  DensityCheck c;
  c.hermiticity_error = (rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(rho.mat.trace() - Complex(1.0, 0.0));
  Matrix herm = 0.5 * (rho.mat + rho.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.basis != rho2.basis)
    throw std::invalid_argument("trace_distance: states live in different bases");
  Matrix diff = 0.5 * ((rho1.mat - rho2.mat) + (rho1.mat - rho2.mat).adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace pbsim
