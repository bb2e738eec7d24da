#include "pbsim/model.hpp"

#include <cmath>
#include <stdexcept>

namespace pbsim {

namespace {

bool finite(double x) { return std::isfinite(x); }

void require_finite(std::vector<std::string>& out, double v, const char* name) {
  if (!finite(v)) out.push_back(std::string(name) + " must be finite");
}

}  // namespace

std::vector<std::string> SystemParams::issues() const {
  std::vector<std::string> out;
  require_finite(out, g, "g");
  require_finite(out, u0, "u0");
  require_finite(out, delta_c, "delta_c");
  if (delta_a) require_finite(out, *delta_a, "delta_a");
  require_finite(out, eta, "eta");
  require_finite(out, omega_m, "omega_m");
  require_finite(out, theta, "theta");
  require_finite(out, kappa, "kappa");
  require_finite(out, gamma_g, "gamma_g");
  require_finite(out, gamma_d, "gamma_d");
  if (finite(g) && g < 0) out.push_back("g must be >= 0");
  if (finite(eta) && eta < 0) out.push_back("eta must be >= 0");
  if (finite(omega_m) && omega_m < 0) out.push_back("omega_m must be >= 0");
  if (finite(kappa) && kappa <= 0) out.push_back("kappa must be > 0");
  if (finite(gamma_g) && gamma_g < 0) out.push_back("gamma_g must be >= 0");
  if (finite(gamma_d) && gamma_d < 0) out.push_back("gamma_d must be >= 0");
  if (kappa_hz && (!finite(*kappa_hz) || *kappa_hz <= 0))
    out.push_back("kappa_hz must be > 0");
  return out;
}

void SystemParams::validate() const {
  auto out = issues();
  if (out.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& s : out) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

std::vector<std::string> RawAtomParams::adiabatic_warnings() const {
  std::vector<std::string> out;
  if (delta == 0.0) return out;  // derive_effective rejects this case outright
  if (std::abs(g0 / delta) > 0.1)
    out.push_back("|g0/delta| exceeds 0.1; adiabatic elimination is marginal");
  if (std::abs(omega / delta) > 0.1)
    out.push_back("|omega/delta| exceeds 0.1; adiabatic elimination is marginal");
  return out;
}

EffectiveCouplings derive_effective(const RawAtomParams& raw) {
  if (!std::isfinite(raw.delta) || raw.delta == 0.0)
    throw std::invalid_argument(
        "derive_effective: delta must be finite and nonzero");
  return {-raw.omega * raw.g0 / raw.delta, -raw.g0 * raw.g0 / raw.delta};
}

Operator hamiltonian(const SystemParams& p, const Basis& b) {
  p.validate();
  const Matrix a = cavity_annihilator(b).mat;
  const Matrix ad = a.adjoint();

  Matrix h = Matrix::Zero(b.dim, b.dim);
  for (int n = 0; n <= b.n_max; ++n) {
    h(b.index(n, Spin::up), b.index(n, Spin::up)) =
        p.delta_c * n + p.u0 * n - p.delta_a_eff();
    h(b.index(n, Spin::down), b.index(n, Spin::down)) = p.delta_c * n;
  }
  h += p.eta * (ad + a);

  const Complex mw = p.omega_m * std::exp(Complex(0.0, p.theta));
  const Matrix raise =
      (p.g * ad + mw * Matrix::Identity(b.dim, b.dim)) * spin_lowering(b).mat;
  h += raise;
  h += raise.adjoint();

  const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12)
    throw std::logic_error("hamiltonian assembly lost Hermiticity: " +
                           std::to_string(herm));
  return {b, std::move(h)};
}

Operator excitation_number(const Basis& b) {
  Matrix m = Matrix::Zero(b.dim, b.dim);
  for (int i = 0; i < b.dim; ++i)
    m(i, i) = b.photon(i) + (b.spin(i) == Spin::down ? 1.0 : 0.0);
  return {b, std::move(m)};
}

double canonical_phase(double theta) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  double t = std::fmod(theta, two_pi);
  if (t < 0) t += two_pi;
  if (t >= two_pi) t = 0.0;  // guards the fmod boundary
  return t;
}

}  // namespace pbsim
