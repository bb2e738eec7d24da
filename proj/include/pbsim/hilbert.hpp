#pragma once

#include <Eigen/Dense>
#include <complex>

namespace pbsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Spin { up = 0, down = 1 };

// Truncated Fock ⊗ spin-1/2 space. States are ordered n-major with ↑ before
// ↓, so the flat index of |n,σ⟩ is 2n + (σ == ↓). The ordering is fixed so
// that serialized matrices are reproducible bit for bit.
struct Basis {
  int n_max = 0;
  int dim = 0;

  explicit Basis(int n_max_photons);

  int index(int n, Spin s) const noexcept { return 2 * n + static_cast<int>(s); }
  int photon(int idx) const noexcept { return idx / 2; }
  Spin spin(int idx) const noexcept { return static_cast<Spin>(idx % 2); }

  friend bool operator==(const Basis&, const Basis&) = default;
};

// A matrix tied to the basis it was built in.
struct Operator {
  Basis basis;
  Matrix mat;
};

// A (candidate) density matrix tied to its basis. Validity — Hermiticity,
// unit trace, positive semidefiniteness — is checked where states are
// produced, not enforced by the type.
struct DensityMatrix {
  Basis basis;
  Matrix mat;
};

// Ladder and spin operators on the truncated space. The spin "lowering"
// operator maps |n,↓⟩ to |n,↑⟩ for every photon number n.
Operator cavity_annihilator(const Basis& b);
Operator cavity_creator(const Basis& b);
Operator number_operator(const Basis& b);
Operator spin_lowering(const Basis& b);
Operator spin_raising(const Basis& b);
Operator spin_up_projector(const Basis& b);
Operator spin_down_projector(const Basis& b);
Operator identity_operator(const Basis& b);

// Tr(op ρ). Throws std::invalid_argument if op and rho were built in
// different bases.
Complex expectation(const Operator& op, const DensityMatrix& rho);

// |n,σ⟩⟨n,σ|
DensityMatrix pure_state(const Basis& b, int n, Spin s);

// Diagnostics for the density-matrix invariants.
struct DensityCheck {
  double hermiticity_error = 0.0;  // max |ρ - ρ†|
  double trace_error = 0.0;        // |Tr ρ - 1|
  double min_eigenvalue = 0.0;
};

DensityCheck check_density(const DensityMatrix& rho);

// (1/2) Σ |eig(ρ1 - ρ2)|
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace pbsim
