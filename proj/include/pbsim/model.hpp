#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbsim/hilbert.hpp"

namespace pbsim {

// Default drive strength: the empty-cavity photon number at resonance with
// this drive is (eta/kappa)^2 = 0.02 for kappa = 1.
inline constexpr double kDefaultEta = 0.1414213562373095;  // sqrt(0.02)

// Parameters of the effective two-level model in the frame rotating with the
// probe. All rates and detunings are in units of the cavity decay rate kappa;
// kappa itself is kept explicit so that unit choices stay visible.
//
//   delta_c  cavity-probe detuning
//   delta_a  two-photon (spin) detuning; when unset it follows delta_c
//   u0       photon-number-dependent Stark shift of the ↑ level
//   g        cavity-assisted Raman coupling |n,↓⟩ ↔ |n+1,↑⟩
//   omega_m, theta   microwave coupling Ωm e^{iθ} between ↓ and ↑
//   eta      coherent probe drive on the cavity
//   gamma_g  decay of the ↓ level toward ↑
//   gamma_d  dephasing of the ↓ population
//   kappa_hz optional physical value of kappa in rad/s (output conversion only)
struct SystemParams {
  double g = 1.0;
  double u0 = 0.0;
  double delta_c = 0.0;
  std::optional<double> delta_a;
  double eta = kDefaultEta;
  double omega_m = 0.0;
  double theta = 0.0;
  double kappa = 1.0;
  double gamma_g = 1e-3;
  double gamma_d = 1e-3;
  std::optional<double> kappa_hz;

  double delta_a_eff() const { return delta_a.value_or(delta_c); }

  // All violated parameter constraints, empty when valid.
  std::vector<std::string> issues() const;
  // Throws std::invalid_argument listing every violated constraint.
  void validate() const;
};

// Raw three-level parameters before adiabatic elimination of the excited
// state: single-photon coupling g0, classical Raman drive Omega, and the
// shared detuning Delta from the excited level.
struct RawAtomParams {
  double g0 = 0.0;
  double omega = 0.0;
  double delta = 0.0;

  // Warnings (not errors) when the eliminated level is not far detuned.
  std::vector<std::string> adiabatic_warnings() const;
};

struct EffectiveCouplings {
  double g = 0.0;   // -omega * g0 / delta
  double u0 = 0.0;  // -g0^2 / delta
};

// Adiabatic elimination of the excited state. Throws std::invalid_argument
// when delta == 0.
EffectiveCouplings derive_effective(const RawAtomParams& raw);

// Effective Hamiltonian on the truncated space:
//   H = Δc a†a + (U0 a†a − Δa)|↑⟩⟨↑| + η(a† + a)
//       + [(g a† + Ωm e^{iθ})|↑⟩⟨↓| + h.c.]
// Hermitian by construction; verified to 1e-12 before returning.
Operator hamiltonian(const SystemParams& p, const Basis& b);

// a†a + |↓⟩⟨↓|: the conserved excitation number when eta = omega_m = 0.
Operator excitation_number(const Basis& b);

// Phase folded into [0, 2π).
double canonical_phase(double theta);

}  // namespace pbsim
