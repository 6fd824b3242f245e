#include "chiraltp/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "chiraltp/errors.hpp"
#include "chiraltp/units.hpp"

namespace chiraltp {

namespace {

using cplx = std::complex<double>;

constexpr double kGroupingMHz = 1e-9;

}  // namespace

void BeamDrive::validate() const {
  if (Omega1 < 0.0 || Omega2 < 0.0) {
    throw std::invalid_argument("BeamDrive: Rabi frequencies must be >= 0");
  }
  if (theta <= -std::numbers::pi || theta > std::numbers::pi ||
      theta_f <= -std::numbers::pi || theta_f > std::numbers::pi) {
    throw std::invalid_argument("BeamDrive: angles must lie in (-pi, pi]");
  }
}

BeamDrive with_flipped_handedness(BeamDrive drive) {
  drive.theta_f = wrap_principal_angle(-drive.theta_f);
  return drive;
}

double wrap_principal_angle(double angle) {
  angle = std::remainder(angle, 2.0 * std::numbers::pi);
  if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
  return angle;
}

Eigen::Matrix4cd build_rotating_hamiltonian(const BeamDrive& d) {
  d.validate();
  Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
  H(1, 1) = d.Delta1;
  H(2, 2) = d.Delta1;
  H(3, 3) = d.Delta1 + d.Delta2;

  const double half1 = 0.5 * d.Omega1;
  H(1, 0) = half1;
  H(2, 0) = half1;

  const cplx g_plus = 0.5 * d.Omega2 * std::polar(1.0, d.theta);
  const cplx g_minus = -0.5 * d.Omega2 * std::polar(1.0, d.theta_f);
  H(3, 1) = g_plus;
  H(3, 2) = g_minus;

  H(0, 1) = std::conj(H(1, 0));
  H(0, 2) = std::conj(H(2, 0));
  H(1, 3) = std::conj(H(3, 1));
  H(2, 3) = std::conj(H(3, 2));
  return H;
}

std::vector<Eigen::Vector4cd> evolve(const BeamDrive& drive,
                                     const Eigen::Vector4cd& initial,
                                     std::span<const double> t_grid_us) {
  const Eigen::Matrix4cd H = build_rotating_hamiltonian(drive);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(H);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("evolve: eigensolver failed");
  }
  const Eigen::Matrix4cd& V = solver.eigenvectors();
  const Eigen::Vector4d& w = solver.eigenvalues();
  const Eigen::Vector4cd projected = V.adjoint() * initial;

  std::vector<Eigen::Vector4cd> states;
  states.reserve(t_grid_us.size());
  for (const double t : t_grid_us) {
    Eigen::Vector4cd phased;
    for (int k = 0; k < 4; ++k) {
      phased(k) = std::polar(1.0, -kTwoPi * w(k) * t) * projected(k);
    }
    states.push_back(V * phased);
  }
  return states;
}

double time_averaged_P_gamma(const BeamDrive& drive,
                             const Eigen::Vector4cd& initial) {
  const Eigen::Matrix4cd H = build_rotating_hamiltonian(drive);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(H);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("time_averaged_P_gamma: eigensolver failed");
  }
  const Eigen::Matrix4cd& V = solver.eigenvectors();
  const Eigen::Vector4d& w = solver.eigenvalues();
  const Eigen::Vector4cd projected = V.adjoint() * initial;

  // Cross terms between distinct eigenvalue groups average to zero;
  // within-group terms survive: Pbar = sum_g |<gamma|P_g|psi0>|^2.
  double pbar = 0.0;
  int lo = 0;
  while (lo < 4) {
    int hi = lo;
    while (hi + 1 < 4 && w(hi + 1) - w(hi) <= kGroupingMHz) ++hi;
    cplx amp = 0.0;
    for (int k = lo; k <= hi; ++k) amp += V(3, k) * projected(k);
    pbar += std::norm(amp);
    lo = hi + 1;
  }
  return pbar;
}

}  // namespace chiraltp
