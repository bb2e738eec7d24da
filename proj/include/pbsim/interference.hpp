#pragma once

#include "pbsim/model.hpp"

namespace pbsim {

// Steady-state amplitudes of the truncated weak-drive wavefunction
//   |ψ⟩ ≈ C0↑|0,↑⟩ + C0↓|0,↓⟩ + C1↑|1,↑⟩ + C1↓|1,↓⟩ + C2↑|2,↑⟩,
// normalized to c0_up = 1.
struct WeakDriveAmplitudes {
  Complex c0_up{1.0, 0.0};
  Complex c0_dn{0.0, 0.0};
  Complex c1_up{0.0, 0.0};
  Complex c1_dn{0.0, 0.0};
  Complex c2_up{0.0, 0.0};
};

struct OptimalConditions {
  double theta = 0.0;
  double omega_m = 0.0;
};

// Microwave phase that makes the two-photon feeding paths interfere
// destructively: theta = arctan((kappa + gamma_g) / (2 delta_c)), on the
// branch lying in [0, π] (π/2 at delta_c = 0). Throws std::invalid_argument
// when both arguments of the arctangent vanish.
double optimal_phase(double delta_c, double kappa, double gamma_g);

// Matching microwave amplitude:
//   Ωm = η (R + sqrt(R² + 4)) / 2,  R = sqrt(4 Δc² + (κ + γg)²) / g.
// Requires g > 0 and eta > 0.
double optimal_microwave(const SystemParams& p);

OptimalConditions optimal_conditions(const SystemParams& p);

// Solves the weak-drive amplitude equations
//   η C1↑ + Ωm e^{iθ} C0↓ = 0
//   η C1↑ + √2 Δ1 C2↑ + g C1↓ = 0
//   Ωm e^{-iθ} C1↑ + η C0↓ + √2 g C2↑ + Δ2 C1↓ = 0
//   η C0↑ + Δ1 C1↑ + g C0↓ + √2 η C2↑ + Ωm e^{iθ} C1↓ = 0
// with Δ1 = Δc + U0 - iκ and Δ2 = 2Δc - iκ - iγg, closed by the
// normalization C0↑ = 1. Requires eta > 0; throws
// ResonanceDegeneracyError when the linear system is numerically singular.
WeakDriveAmplitudes weak_drive_amplitudes(const SystemParams& p);

// Wavefunction estimate of the equal-time intensity correlation:
//   g²(0) ≈ 2 |c2_up|² / (|c1_up|² + |c1_dn|² + 2 |c2_up|²)².
// Throws UndefinedCorrelationError when the denominator vanishes.
double analytic_g2(const WeakDriveAmplitudes& amps);

}  // namespace pbsim
