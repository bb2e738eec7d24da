#include "pbsim/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "pbsim/errors.hpp"

namespace pbsim {

double photon_number(const DensityMatrix& rho) {
  double n = 0.0;
  for (int j = 0; j < rho.basis.dim; ++j)
    n += rho.basis.photon(j) * rho.mat(j, j).real();
  return n;
}

double g2_zero(const DensityMatrix& rho) {
  const double n = photon_number(rho);
  if (!(n > 0.0))
    throw UndefinedCorrelationError(
        "g2_zero: photon number is not positive, correlation undefined");
  double pair = 0.0;  // Tr(a†a†aa ρ) = Σ n(n-1) ρ_nn
  for (int j = 0; j < rho.basis.dim; ++j) {
    const double nj = rho.basis.photon(j);
    pair += nj * (nj - 1.0) * rho.mat(j, j).real();
  }
  return pair / (n * n);
}

CorrelationSeries g2_tau(const DensityMatrix& rho_s, const Superoperator& lv,
                         const std::vector<double>& taus,
                         const PropagateOptions& opts) {
  if (rho_s.basis != lv.basis)
    throw std::invalid_argument("g2_tau: state basis does not match generator");
  if (taus.empty() || taus.front() != 0.0)
    throw std::invalid_argument("g2_tau: delays must start at 0");
  const double n_s = photon_number(rho_s);
  if (!(n_s > 0.0))
    throw UndefinedCorrelationError(
        "g2_tau: steady state carries no photons, correlation undefined");

  const Matrix a = cavity_annihilator(lv.basis).mat;
  Matrix conditional = a * rho_s.mat * a.adjoint() / n_s;  // trace one by construction
  const auto states =
      propagate(lv, DensityMatrix{lv.basis, std::move(conditional)}, taus, opts);

  CorrelationSeries out;
  out.taus = taus;
  out.values.reserve(taus.size());
  for (const auto& st : states) out.values.push_back(photon_number(st) / n_s);
  out.g2_zero = g2_zero(rho_s);
  return out;
}

std::vector<double> photon_dynamics(const SystemParams& p, const Basis& b,
                                    const DensityMatrix& rho0,
                                    const std::vector<double>& times,
                                    const PropagateOptions& opts) {
  const auto states = propagate(build_liouvillian(p, b), rho0, times, opts);
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& st : states) out.push_back(photon_number(st));
  return out;
}

}  // namespace pbsim
