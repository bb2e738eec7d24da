#include "pbsim/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace pbsim {

Splitting dressed_splitting(int n, double g, double u0) {
  if (n < 1)
    throw std::invalid_argument("dressed_splitting: n must be >= 1, got " +
                                std::to_string(n));
  if (!std::isfinite(g) || !std::isfinite(u0))
    throw std::invalid_argument("dressed_splitting: g and u0 must be finite");
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(nn * nn * u0 * u0 + 4.0 * nn * g * g);
  return {(nn * u0 - root) / 2.0, (nn * u0 + root) / 2.0};
}

EnergyPair dressed_energy(int n, const SystemParams& p) {
  if (p.delta_a && *p.delta_a != p.delta_c)
    throw std::invalid_argument(
        "dressed_energy: closed form requires delta_a == delta_c");
  const Splitting s = dressed_splitting(n, p.g, p.u0);
  const double base = n * p.delta_c;
  return {base + s.lower, base + s.upper};
}

DressedLevel dressed_level(int n, Branch branch, const SystemParams& p) {
  const Splitting s = dressed_splitting(n, p.g, p.u0);
  const EnergyPair e = dressed_energy(n, p);
  if (branch == Branch::lower) return {n, branch, s.lower, e.lower};
  return {n, branch, s.upper, e.upper};
}

double resonance_detuning(Branch branch, const SystemParams& p) {
  const Splitting s = dressed_splitting(1, p.g, p.u0);
  return branch == Branch::lower ? -s.lower : -s.upper;
}

std::vector<SpectrumBlock> numeric_spectrum(const SystemParams& p, const Basis& b) {
  if (p.eta != 0.0 || p.omega_m != 0.0)
    throw std::invalid_argument(
        "numeric_spectrum: requires eta == 0 and omega_m == 0 "
        "(excitation-conserving configuration)");
  const Matrix h = hamiltonian(p, b).mat;
  const double shift = p.delta_a_eff();  // bare |0,↑⟩ level sits at -delta_a

  std::vector<SpectrumBlock> blocks;
  blocks.reserve(b.n_max + 2);

  SpectrumBlock ground{0, {}};
  ground.energies.push_back(
      h(b.index(0, Spin::up), b.index(0, Spin::up)).real() + shift);
  blocks.push_back(std::move(ground));

  for (int n = 1; n <= b.n_max; ++n) {
    const int i = b.index(n, Spin::up);
    const int j = b.index(n - 1, Spin::down);
    Eigen::Matrix2cd sub;
    sub << h(i, i), h(i, j), h(j, i), h(j, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(sub, Eigen::EigenvaluesOnly);
    SpectrumBlock blk{n, {es.eigenvalues()(0) + shift, es.eigenvalues()(1) + shift}};
    blocks.push_back(std::move(blk));
  }

  SpectrumBlock top{b.n_max + 1, {}};
  const int k = b.index(b.n_max, Spin::down);
  top.energies.push_back(h(k, k).real() + shift);
  blocks.push_back(std::move(top));

  return blocks;
}

}  // namespace pbsim
