#include "pbsim/interference.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pbsim/errors.hpp"

namespace pbsim {

double optimal_phase(double delta_c, double kappa, double gamma_g) {
  if (!std::isfinite(delta_c) || !std::isfinite(kappa) || !std::isfinite(gamma_g))
    throw std::invalid_argument("optimal_phase: arguments must be finite");
  const double y = kappa + gamma_g;
  const double x = 2.0 * delta_c;
  if (y == 0.0 && x == 0.0)
    throw std::invalid_argument("optimal_phase: kappa + gamma_g and delta_c both vanish");
  // y >= 0 for physical rates, so atan2 lands in [0, π].
  return std::atan2(y, x);
}

double optimal_microwave(const SystemParams& p) {
  p.validate();
  if (p.g <= 0.0)
    throw std::invalid_argument("optimal_microwave: requires g > 0");
  if (p.eta <= 0.0)
    throw std::invalid_argument("optimal_microwave: requires eta > 0");
  const double r =
      std::sqrt(4.0 * p.delta_c * p.delta_c +
                (p.kappa + p.gamma_g) * (p.kappa + p.gamma_g)) /
      p.g;
  return p.eta * (r + std::sqrt(r * r + 4.0)) / 2.0;
}

OptimalConditions optimal_conditions(const SystemParams& p) {
  OptimalConditions c;
  c.theta = optimal_phase(p.delta_c, p.kappa, p.gamma_g);
  c.omega_m = optimal_microwave(p);
  return c;
}

WeakDriveAmplitudes weak_drive_amplitudes(const SystemParams& p) {
  p.validate();
  if (p.eta <= 0.0)
    throw std::invalid_argument("weak_drive_amplitudes: requires eta > 0");

  using LD = long double;
  using CLD = std::complex<LD>;
  using MatrixLD = Eigen::Matrix<CLD, 5, 5>;
  using VectorLD = Eigen::Matrix<CLD, 5, 1>;

  const LD g = p.g;
  const LD u0 = p.u0;
  const LD dc = p.delta_c;
  const LD eta = p.eta;
  const LD om = p.omega_m;
  const LD kappa = p.kappa;
  const LD gg = p.gamma_g;
  const CLD i(0.0L, 1.0L);
  const CLD eip = std::exp(i * static_cast<LD>(p.theta));
  const CLD d1 = dc + u0 - i * kappa;       // one-photon complex detuning
  const CLD d2 = 2.0L * dc - i * (kappa + gg);  // two-photon complex detuning
  const LD rt2 = std::sqrt(2.0L);

  // Unknown order: (c0_up, c0_dn, c1_up, c1_dn, c2_up).
  MatrixLD a = MatrixLD::Zero();
  VectorLD b = VectorLD::Zero();
  // Normalization closure: c0_up = 1.
  a(0, 0) = 1.0L;
  b(0) = 1.0L;
  // η C1↑ + Ωm e^{iθ} C0↓ = 0
  a(1, 2) = eta;
  a(1, 1) = om * eip;
  // η C1↑ + √2 Δ1 C2↑ + g C1↓ = 0
  a(2, 2) = eta;
  a(2, 4) = rt2 * d1;
  a(2, 3) = g;
  // Ωm e^{-iθ} C1↑ + η C0↓ + √2 g C2↑ + Δ2 C1↓ = 0
  a(3, 2) = om * std::conj(eip);
  a(3, 1) = eta;
  a(3, 4) = rt2 * g;
  a(3, 3) = d2;
  // η C0↑ + Δ1 C1↑ + g C0↓ + √2 η C2↑ + Ωm e^{iθ} C1↓ = 0
  a(4, 0) = eta;
  a(4, 2) = d1;
  a(4, 1) = g;
  a(4, 4) = rt2 * eta;
  a(4, 3) = om * eip;

  const VectorLD x = Eigen::PartialPivLU<MatrixLD>(a).solve(b);
  const LD residual = (a * x - b).norm();
  const LD scale = a.norm() * x.norm() + b.norm();
  if (!(residual <= 1e-10L * scale) || !x.allFinite()) {
    Eigen::Matrix<std::complex<double>, 5, 5> ad = a.cast<std::complex<double>>();
    Eigen::JacobiSVD<Eigen::Matrix<std::complex<double>, 5, 5>> svd(ad);
    const double smin = svd.singularValues()(4);
    const double cond =
        smin > 0.0 ? svd.singularValues()(0) / smin
                   : std::numeric_limits<double>::infinity();
    throw ResonanceDegeneracyError(
        "weak_drive_amplitudes: amplitude equations numerically singular", cond);
  }

  WeakDriveAmplitudes amps;
  amps.c0_up = Complex(static_cast<double>(x(0).real()), static_cast<double>(x(0).imag()));
  amps.c0_dn = Complex(static_cast<double>(x(1).real()), static_cast<double>(x(1).imag()));
  amps.c1_up = Complex(static_cast<double>(x(2).real()), static_cast<double>(x(2).imag()));
  amps.c1_dn = Complex(static_cast<double>(x(3).real()), static_cast<double>(x(3).imag()));
  amps.c2_up = Complex(static_cast<double>(x(4).real()), static_cast<double>(x(4).imag()));
  return amps;
}

double analytic_g2(const WeakDriveAmplitudes& amps) {
  const double n1 = std::norm(amps.c1_up) + std::norm(amps.c1_dn);
  const double n2 = std::norm(amps.c2_up);
  const double denom = n1 + 2.0 * n2;
  if (denom <= 0.0)
    throw UndefinedCorrelationError(
        "analytic_g2: one-photon population vanishes, correlation undefined");
  return 2.0 * n2 / (denom * denom);
}

}  // namespace pbsim
