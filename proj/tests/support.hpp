#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "pbsim/hilbert.hpp"
#include "pbsim/liouvillian.hpp"
#include "pbsim/model.hpp"

namespace testsupport {

// Random physical parameter set covering the regimes the solvers must handle:
// moderate coupling, both Stark-shift signs, arbitrary microwave settings and
// slow spin rates.
inline pbsim::SystemParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> g(0.5, 2.0), shift(-5.0, 5.0), drive(0.1, 0.2),
      microwave(0.0, 0.3), phase(0.0, 2.0 * M_PI), rate(5e-4, 5e-3);
  pbsim::SystemParams p;
  p.g = g(rng);
  p.u0 = shift(rng);
  p.delta_c = shift(rng);
  p.eta = drive(rng);
  p.omega_m = microwave(rng);
  p.theta = phase(rng);
  p.gamma_g = rate(rng);
  p.gamma_d = rate(rng);
  return p;
}

// Reference evolution by dense eigendecomposition of the generator:
// vec(ρ(t)) = V e^{Λt} V⁻¹ vec(ρ0). Cubic in dim², but entirely independent
// of the production integrator.
inline std::vector<pbsim::Matrix> eigen_propagate(const pbsim::Superoperator& lv,
                                                  const pbsim::Matrix& rho0,
                                                  const std::vector<double>& times) {
  const Eigen::MatrixXcd dense(lv.mat);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dense);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigen_propagate: eigendecomposition failed");
  const Eigen::VectorXcd coeff = es.eigenvectors().partialPivLu().solve(pbsim::vectorize(rho0));
  std::vector<pbsim::Matrix> out;
  out.reserve(times.size());
  for (double t : times) {
    Eigen::VectorXcd scaled = coeff;
    for (Eigen::Index i = 0; i < scaled.size(); ++i)
      scaled(i) *= std::exp(es.eigenvalues()(i) * t);
    out.push_back(pbsim::unvectorize(es.eigenvectors() * scaled, lv.basis.dim));
  }
  return out;
}

// Frequency (cycles per unit time) of the strongest bin in a naive DFT of the
// mean-subtracted, uniformly sampled series.
inline double dominant_frequency(const std::vector<double>& times,
                                 const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 4 || times.size() != n)
    throw std::invalid_argument("dominant_frequency: need at least 4 uniform samples");
  const double dt = times[1] - times[0];
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double best_mag = -1.0;
  double best_freq = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = -2.0 * M_PI * static_cast<double>(k * j) / static_cast<double>(n);
      acc += (values[j] - mean) * std::exp(std::complex<double>(0.0, arg));
    }
    if (std::abs(acc) > best_mag) {
      best_mag = std::abs(acc);
      best_freq = static_cast<double>(k) / (static_cast<double>(n) * dt);
    }
  }
  return best_freq;
}

// Diagonal cavity state ⊗ |↑⟩ with the given (unnormalized) photon weights.
inline pbsim::DensityMatrix diagonal_cavity_state(const pbsim::Basis& b,
                                                  const std::vector<double>& weights) {
  pbsim::DensityMatrix rho{b, pbsim::Matrix::Zero(b.dim, b.dim)};
  double total = 0.0;
  for (double w : weights) total += w;
  for (int n = 0; n <= b.n_max && n < static_cast<int>(weights.size()); ++n) {
    const int i = b.index(n, pbsim::Spin::up);
    rho.mat(i, i) = weights[static_cast<std::size_t>(n)] / total;
  }
  return rho;
}

}  // namespace testsupport
