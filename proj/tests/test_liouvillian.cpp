#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "pbsim/errors.hpp"
#include "pbsim/hilbert.hpp"
#include "pbsim/liouvillian.hpp"
#include "pbsim/model.hpp"
#include "support.hpp"

using namespace pbsim;

namespace {

Matrix random_density(const Basis& b, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Matrix a(b.dim, b.dim);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

// The master equation written out with dense matrix algebra, term by term.
Matrix dense_lindblad(const SystemParams& p, const Basis& b, const Matrix& rho) {
  const Matrix h = hamiltonian(p, b).mat;
  const auto dissipator = [&](const Matrix& o, double rate) -> Matrix {
    const Matrix od = o.adjoint();
    return (rate / 2.0) * (2.0 * o * rho * od - od * o * rho - rho * od * o);
  };
  const Complex i_unit(0.0, 1.0);
  return -i_unit * (h * rho - rho * h) + dissipator(cavity_annihilator(b).mat, p.kappa) +
         dissipator(spin_lowering(b).mat, p.gamma_g) +
         dissipator(spin_down_projector(b).mat, p.gamma_d);
}

}  // namespace

TEST_CASE("vectorization is column-major and invertible") {
  const Basis b(2);
  std::mt19937 rng(3u);
  const Matrix m = random_density(b, rng);
  const Vector v = vectorize(m);
  for (int r = 0; r < b.dim; ++r)
    for (int c = 0; c < b.dim; ++c) CHECK(v(c * b.dim + r) == m(r, c));
  CHECK((unvectorize(v, b.dim) - m).norm() == 0.0);
  CHECK_THROWS_AS(unvectorize(v, b.dim + 1), std::invalid_argument);
}

TEST_CASE("superoperator action matches the dense master equation") {
  const Basis b(4);
  std::mt19937 rng(17u);
  for (int k = 0; k < 10; ++k) {
    const SystemParams p = testsupport::random_params(rng);
    const Superoperator lv = build_liouvillian(p, b);
    const Matrix rho = random_density(b, rng);
    const Matrix via_superop = pbsim::apply(lv, rho);
    const Matrix direct = dense_lindblad(p, b, rho);
    CHECK((via_superop - direct).norm() <= 1e-12 * std::max(1.0, direct.norm()));
    // trace is conserved for any argument
    CHECK(std::abs(via_superop.trace()) <= 1e-12);
  }
}

TEST_CASE("generator spectrum lies in the closed left half plane") {
  const Basis b(3);
  std::mt19937 rng(29u);
  for (int k = 0; k < 3; ++k) {
    const SystemParams p = testsupport::random_params(rng);
    const Eigen::MatrixXcd dense(build_liouvillian(p, b).mat);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dense, false);
    REQUIRE(es.info() == Eigen::Success);
    CHECK(es.eigenvalues().real().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("driven empty cavity reaches the analytic coherent state") {
  const Basis b(8);
  SystemParams p;
  p.g = 0.0;

  SUBCASE("on resonance") {
    const DensityMatrix rho = steady_state(p, b);
    double n_s = 0.0;
    for (int n = 0; n <= b.n_max; ++n)
      for (Spin s : {Spin::up, Spin::down})
        n_s += n * rho.mat(b.index(n, s), b.index(n, s)).real();
    CHECK(n_s == doctest::Approx(0.08).epsilon(1e-8));
  }
  SUBCASE("detuned") {
    p.delta_c = 1.5;
    const DensityMatrix rho = steady_state(p, b);
    double n_s = 0.0;
    for (int n = 0; n <= b.n_max; ++n)
      for (Spin s : {Spin::up, Spin::down})
        n_s += n * rho.mat(b.index(n, s), b.index(n, s)).real();
    const double expected =
        p.eta * p.eta / (p.delta_c * p.delta_c + p.kappa * p.kappa / 4.0);
    CHECK(n_s == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("undriven atom-cavity system settles into the dark state") {
  const Basis b(6);
  SystemParams p;
  p.eta = 0.0;
  p.u0 = -5.0;
  p.delta_c = 2.0;
  const Superoperator lv = build_liouvillian(p, b);
  const DensityMatrix dark = pure_state(b, 0, Spin::up);
  CHECK(pbsim::apply(lv, dark.mat).norm() <= 1e-14);
  CHECK(trace_distance(steady_state(lv), dark) <= 1e-10);
}

TEST_CASE("steady state agrees with a dense null-space computation") {
  const Basis b(4);
  std::mt19937 rng(31u);
  for (int k = 0; k < 5; ++k) {
    const SystemParams p = testsupport::random_params(rng);
    const Superoperator lv = build_liouvillian(p, b);
    const DensityMatrix rho = steady_state(lv);
    CHECK((lv.mat * vectorize(rho.mat)).norm() <= 1e-10 * std::max(1.0, lv.mat.norm()));

    // independent kernel vector from a dense eigendecomposition
    const Eigen::MatrixXcd dense(lv.mat);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dense);
    REQUIRE(es.info() == Eigen::Success);
    Eigen::Index slowest = 0;
    es.eigenvalues().real().maxCoeff(&slowest);
    Matrix kernel = unvectorize(es.eigenvectors().col(slowest), b.dim);
    kernel = 0.5 * (kernel + Matrix(kernel.adjoint()));
    kernel /= kernel.trace();
    CHECK(trace_distance(rho, DensityMatrix{b, kernel}) <= 1e-8);
  }
}

TEST_CASE("degenerate kernels are rejected rather than silently mixed") {
  // no dissipation links the spin states and nothing drives the cavity, so
  // both |0,↑⟩ and |0,↓⟩ are stationary
  const Basis b(3);
  SystemParams p;
  p.g = 0.0;
  p.eta = 0.0;
  p.gamma_g = 0.0;
  p.gamma_d = 0.0;
  try {
    steady_state(p, b);
    FAIL("expected DegenerateSteadyStateError");
  } catch (const DegenerateSteadyStateError& e) {
    CHECK(e.condition_estimate() > 1e8);
  }
}

TEST_CASE("propagation matches the eigendecomposition oracle") {
  const Basis b(3);
  std::mt19937 rng(37u);
  const SystemParams p = testsupport::random_params(rng);
  const Superoperator lv = build_liouvillian(p, b);
  const DensityMatrix rho0{b, random_density(b, rng)};
  const std::vector<double> times{0.0, 0.3, 1.0, 2.5};
  const auto states = propagate(lv, rho0, times);
  const auto reference = testsupport::eigen_propagate(lv, rho0.mat, times);
  REQUIRE(states.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Matrix ref = 0.5 * (reference[i] + Matrix(reference[i].adjoint()));
    CHECK(trace_distance(states[i], DensityMatrix{b, ref}) <= 1e-6);
  }
  CHECK((states[0].mat - rho0.mat).norm() <= 1e-12);
}

TEST_CASE("photon number decays at the cavity rate") {
  const Basis b(5);
  SystemParams p;
  p.g = 0.0;
  p.eta = 0.0;
  const Superoperator lv = build_liouvillian(p, b);
  const DensityMatrix rho0 = pure_state(b, 3, Spin::up);
  const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
  const auto states = propagate(lv, rho0, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    double n = 0.0;
    for (int j = 0; j < b.dim; ++j) n += b.photon(j) * states[i].mat(j, j).real();
    CHECK(n == doctest::Approx(3.0 * std::exp(-p.kappa * times[i])).epsilon(1e-6));
  }
}

TEST_CASE("propagation rejects invalid input and detects stiffness") {
  const Basis b(2);
  SystemParams p;
  const Superoperator lv = build_liouvillian(p, b);
  const DensityMatrix rho0 = pure_state(b, 1, Spin::up);

  CHECK(propagate(lv, rho0, {}).empty());
  CHECK_THROWS_AS(propagate(lv, rho0, {0.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(propagate(lv, rho0, {1.0, 0.5}), std::invalid_argument);
  DensityMatrix bad = rho0;
  bad.mat *= 2.0;
  CHECK_THROWS_AS(propagate(lv, bad, {0.0, 1.0}), std::invalid_argument);

  PropagateOptions strict;
  strict.traj_tol = 1e-30;  // unreachable agreement
  strict.min_step = 9e-4;   // forbid the first halving
  CHECK_THROWS_AS(propagate(lv, rho0, {0.0, 1.0}, strict), StiffnessError);
}
