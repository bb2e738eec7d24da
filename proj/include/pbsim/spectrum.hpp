#pragma once

#include <vector>

#include "pbsim/model.hpp"

namespace pbsim {

enum class Branch { lower, upper };

// Splittings of the n-excitation dressed doublet relative to the bare
// n-photon level:
//   Δ_{n,∓} = [n U0 ∓ sqrt(n² U0² + 4 n g²)] / 2
struct Splitting {
  double lower = 0.0;
  double upper = 0.0;
};

// Dressed-state energies measured from the ground level |0,↑⟩, valid when
// delta_a == delta_c:
//   E_{n,∓} = n Δc + Δ_{n,∓}
struct EnergyPair {
  double lower = 0.0;
  double upper = 0.0;
};

// One dressed level, as displayed by the spectrum table.
struct DressedLevel {
  int n = 0;
  Branch branch = Branch::lower;
  double splitting = 0.0;
  double energy = 0.0;
};

// Eigenvalues of the excitation-conserving Hamiltonian, grouped by block.
// Energies are reported relative to the bare |0,↑⟩ level, the reference in
// which the closed-form dressed energies are written. The two photon-spin
// states left unpaired by truncation — |0,↑⟩ itself and |n_max,↓⟩ — appear
// as their own single-entry blocks.
struct SpectrumBlock {
  int excitation = 0;
  std::vector<double> energies;  // ascending
};

Splitting dressed_splitting(int n, double g, double u0);
EnergyPair dressed_energy(int n, const SystemParams& p);
DressedLevel dressed_level(int n, Branch branch, const SystemParams& p);

// Probe detuning that puts the drive on resonance with the chosen
// single-excitation dressed state: delta_c = -Δ_{1,branch}.
double resonance_detuning(Branch branch, const SystemParams& p);

// Numerical block diagonalization of hamiltonian(p, b). Requires
// eta == omega_m == 0 (throws std::invalid_argument otherwise).
std::vector<SpectrumBlock> numeric_spectrum(const SystemParams& p, const Basis& b);

}  // namespace pbsim
