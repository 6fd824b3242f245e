#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "chiraltp/dynamics.hpp"
#include "chiraltp/units.hpp"

using namespace chiraltp;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

BeamDrive fig3_drive(double theta) {
  // Omega1 = Omega2 = 1 MHz, Delta1 = 0.1 MHz, Delta2 = 0.4 MHz,
  // theta_f = pi/2 for the left-handed molecule.
  return BeamDrive{1.0, 1.0, 0.1, 0.4, theta, kPi / 2.0};
}

std::vector<double> time_grid(double t_max, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = t_max * i / (n - 1);
  return t;
}

Eigen::Vector4cd ground_state() {
  Eigen::Vector4cd c = Eigen::Vector4cd::Zero();
  c(0) = 1.0;
  return c;
}

// Independent classic fixed-step 4th-order integrator of
// dc/dt = -i 2pi H c; deliberately avoids the eigendecomposition path.
Eigen::Vector4cd rk4_evolve(const BeamDrive& drive,
                            const Eigen::Vector4cd& initial, double t_end,
                            double dt) {
  const Eigen::Matrix4cd H = build_rotating_hamiltonian(drive);
  const Eigen::Matrix4cd G = cplx(0.0, -kTwoPi) * H;
  Eigen::Vector4cd c = initial;
  const int steps = static_cast<int>(std::round(t_end / dt));
  for (int s = 0; s < steps; ++s) {
    const Eigen::Vector4cd k1 = G * c;
    const Eigen::Vector4cd k2 = G * (c + 0.5 * dt * k1);
    const Eigen::Vector4cd k3 = G * (c + 0.5 * dt * k2);
    const Eigen::Vector4cd k4 = G * (c + dt * k3);
    c += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return c;
}

BeamDrive random_drive(std::mt19937& rng) {
  std::uniform_real_distribution<double> mag(0.0, 2.0);
  std::uniform_real_distribution<double> det(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  return BeamDrive{mag(rng), mag(rng), det(rng), det(rng), ang(rng),
                   ang(rng)};
}

}  // namespace

TEST_CASE("drive validation") {
  CHECK_THROWS_AS((BeamDrive{-1.0, 1.0, 0.0, 0.0, 0.0, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((BeamDrive{1.0, 1.0, 0.0, 0.0, 4.0, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW(fig3_drive(0.3).validate());
}

TEST_CASE("wrap_principal_angle") {
  CHECK(wrap_principal_angle(0.0) == 0.0);
  CHECK(wrap_principal_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_principal_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_principal_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_principal_angle(2.5 * kPi) == doctest::Approx(0.5 * kPi));
  CHECK(wrap_principal_angle(-2.5 * kPi) == doctest::Approx(-0.5 * kPi));
}

TEST_CASE("handedness flip negates theta_f") {
  const BeamDrive l = fig3_drive(0.3);
  const BeamDrive r = with_flipped_handedness(l);
  CHECK(r.theta_f == doctest::Approx(-kPi / 2.0));
  CHECK(r.theta == l.theta);
  // Flipping at the branch edge stays inside (-pi, pi].
  BeamDrive edge = l;
  edge.theta_f = kPi;
  CHECK(with_flipped_handedness(edge).theta_f == doctest::Approx(kPi));
}

TEST_CASE("rotating Hamiltonian structure") {
  BeamDrive off = fig3_drive(0.7);
  off.Omega1 = off.Omega2 = 0.0;
  const Eigen::Matrix4cd H0 = build_rotating_hamiltonian(off);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(1, 1) = expected(2, 2) = 0.1;
  expected(3, 3) = 0.5;
  CHECK((H0 - expected).norm() < 1e-15);

  const BeamDrive d = fig3_drive(0.7);
  const Eigen::Matrix4cd H = build_rotating_hamiltonian(d);
  CHECK((H - H.adjoint()).norm() < 1e-15);
  CHECK(H(1, 0) == cplx(0.5, 0.0));
  CHECK(H(2, 0) == cplx(0.5, 0.0));
  CHECK(std::abs(H(3, 1) - 0.5 * std::polar(1.0, 0.7)) < 1e-15);
  CHECK(std::abs(H(3, 2) + 0.5 * std::polar(1.0, d.theta_f)) < 1e-15);
}

TEST_CASE("bright-dark structure at theta = theta_f") {
  // The combination of beta+- reached from alpha by beam 1 decouples from
  // gamma when theta = theta_f.
  const BeamDrive d = fig3_drive(kPi / 2.0);
  const Eigen::Matrix4cd H = build_rotating_hamiltonian(d);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(H(3, 1) * s + H(3, 2) * s) < 1e-15);
}

TEST_CASE("evolution basics") {
  const BeamDrive d = fig3_drive(0.3);
  const auto grid = time_grid(10.0, 101);
  const auto traj = evolve(d, ground_state(), grid);
  REQUIRE(traj.size() == grid.size());
  CHECK((traj[0] - ground_state()).norm() < 1e-15);  // t = 0 is identity
  for (const auto& c : traj) {
    CHECK(std::abs(c.norm() - 1.0) < 1e-12);  // unitary propagation
  }
}

TEST_CASE("selection-rule dynamics at the forbidden angle") {
  const BeamDrive left = fig3_drive(kPi / 2.0);   // theta = theta_f^L
  const BeamDrive right = with_flipped_handedness(left);
  const auto grid = time_grid(10.0, 1001);

  double max_left = 0.0, max_right = 0.0;
  const auto traj_l = evolve(left, ground_state(), grid);
  const auto traj_r = evolve(right, ground_state(), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    max_left = std::max(max_left, std::norm(traj_l[i](3)));
    max_right = std::max(max_right, std::norm(traj_r[i](3)));
  }
  CHECK(max_left < 1e-10);
  CHECK(max_right > 1e-2);
}

TEST_CASE("propagator matches an independent RK4 integrator") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 5; ++trial) {
    const BeamDrive d = random_drive(rng);
    const std::vector<double> grid = {0.0, 10.0};
    const Eigen::Vector4cd via_eigen = evolve(d, ground_state(), grid)[1];
    const Eigen::Vector4cd via_rk4 =
        rk4_evolve(d, ground_state(), 10.0, 1e-4);
    CHECK((via_eigen - via_rk4).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("time-averaged gamma population") {
  // Forbidden angle: exactly dark.
  CHECK(time_averaged_P_gamma(fig3_drive(kPi / 2.0), ground_state()) < 1e-10);

  // Omega2 = 0 decouples gamma entirely.
  BeamDrive no_probe = fig3_drive(0.3);
  no_probe.Omega2 = 0.0;
  CHECK(time_averaged_P_gamma(no_probe, ground_state()) < 1e-15);

  // Mirror symmetry: P(theta; theta_f) = P(-theta; -theta_f).
  for (const double theta : {0.2, 1.1, 2.9}) {
    BeamDrive l = fig3_drive(theta);
    BeamDrive r = with_flipped_handedness(l);
    r.theta = -theta;
    CHECK(time_averaged_P_gamma(l, ground_state()) ==
          doctest::Approx(time_averaged_P_gamma(r, ground_state()))
              .epsilon(1e-9));
  }
}

TEST_CASE("eigenprojector average matches a long numerical average") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const BeamDrive d = random_drive(rng);
    const double exact = time_averaged_P_gamma(d, ground_state());

    const int n = 50001;
    const auto grid = time_grid(500.0, n);
    const auto traj = evolve(d, ground_state(), grid);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      acc += w * std::norm(traj[i](3));
    }
    const double averaged = acc / (n - 1);
    CHECK(std::abs(averaged - exact) < 2e-3);
  }
}
