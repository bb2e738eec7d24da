#pragma once

#include <vector>

#include "pbsim/hilbert.hpp"
#include "pbsim/liouvillian.hpp"
#include "pbsim/model.hpp"

namespace pbsim {

// Tr(a†a ρ); real up to the Hermiticity of ρ.
double photon_number(const DensityMatrix& rho);

// Equal-time intensity correlation Tr(a†a†aa ρ) / Tr(a†a ρ)².
// Throws UndefinedCorrelationError when the photon number vanishes.
double g2_zero(const DensityMatrix& rho);

struct CorrelationSeries {
  std::vector<double> taus;    // ascending delays, starting at 0
  std::vector<double> values;  // g²(τ) samples
  double g2_zero = 0.0;        // the τ = 0 value of the steady state
};

// Two-time correlation via the quantum regression theorem: the conditional
// state a ρ_s a† / n_s is propagated under the generator and its photon
// number, normalized by n_s, gives g²(τ). `taus` must be ascending and start
// at 0; `rho_s` must be the steady state of `lv` for the result to be a true
// two-time correlation.
CorrelationSeries g2_tau(const DensityMatrix& rho_s, const Superoperator& lv,
                         const std::vector<double>& taus,
                         const PropagateOptions& opts = {});

// Photon number along the trajectory of rho0 under the parameters' generator,
// evaluated at the requested times.
std::vector<double> photon_dynamics(const SystemParams& p, const Basis& b,
                                    const DensityMatrix& rho0,
                                    const std::vector<double>& times,
                                    const PropagateOptions& opts = {});

}  // namespace pbsim
