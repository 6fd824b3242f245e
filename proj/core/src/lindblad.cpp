#include "chiraltp/lindblad.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "chiraltp/errors.hpp"
#include "chiraltp/units.hpp"

namespace chiraltp {

namespace {

using cplx = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;

constexpr double kKernelRelTol = 1e-10;

Eigen::Matrix<cplx, 16, 16> kron4(const Matrix4& A, const Matrix4& B) {
  Eigen::Matrix<cplx, 16, 16> K;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      K.block<4, 4>(4 * i, 4 * j) = A(i, j) * B;
    }
  }
  return K;
}

}  // namespace

void DecayModel::validate() const {
  if (kappa < 0.0) {
    throw std::invalid_argument("DecayModel: kappa must be >= 0");
  }
}

Liouvillian build_liouvillian(const BeamDrive& drive,
                              const DecayModel& decay) {
  decay.validate();
  const Matrix4 H = build_rotating_hamiltonian(drive);
  const Matrix4 I = Matrix4::Identity();

  // vec(AXB) = (B^T (x) A) vec(X), column stacking.
  Liouvillian L = cplx(0.0, -kTwoPi) *
                  (kron4(I, H) - kron4(H.transpose(), I));

  // Decay channels |o1><o2| at rate kappa: gamma -> beta+, beta-, alpha
  // and beta+- -> alpha (basis order alpha, beta+, beta-, gamma).
  const int channels[5][2] = {{1, 3}, {2, 3}, {0, 3}, {0, 1}, {0, 2}};
  for (const auto& ch : channels) {
    Matrix4 C = Matrix4::Zero();
    C(ch[0], ch[1]) = 1.0;
    const Matrix4 CdC = C.adjoint() * C;
    L += (kTwoPi * decay.kappa) *
         (kron4(C.conjugate(), C) - 0.5 * kron4(I, CdC) -
          0.5 * kron4(CdC.transpose(), I));
  }
  return L;
}

Eigen::Matrix4cd steady_state(const Liouvillian& L) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double scale = sv(0);

  int kernel_dim = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) <= kKernelRelTol * scale) ++kernel_dim;
  }
  if (kernel_dim != 1) {
    throw NumericalError(
        "non-unique steady state: Liouvillian kernel dimension is " +
        std::to_string(kernel_dim));
  }

  const Eigen::VectorXcd null_vec = svd.matrixV().col(15);
  Matrix4 rho = Eigen::Map<const Matrix4>(null_vec.data());
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14) {
    throw NumericalError("steady_state: null vector has vanishing trace");
  }
  rho /= tr;
  return rho;
}

double absorption(const BeamDrive& drive, const DecayModel& decay) {
  if (drive.Omega2 <= 0.0) {
    throw std::invalid_argument("absorption: Omega2 must be positive");
  }
  const Matrix4 rho = steady_state(build_liouvillian(drive, decay));
  // Tr(rho |beta-><gamma|) = <gamma|rho|beta->, etc.
  const cplx tr = std::polar(1.0, -drive.theta_f) * rho(3, 2) -
                  std::polar(1.0, -drive.theta) * rho(3, 1);
  return tr.imag() / (0.5 * drive.Omega2);
}

std::vector<AbsorptionRow> absorption_sweep(const BeamDrive& drive_template,
                                            const DecayModel& decay,
                                            std::span<const double> theta_grid) {
  if (theta_grid.empty()) {
    throw std::invalid_argument("absorption_sweep: empty theta grid");
  }
  std::vector<AbsorptionRow> rows;
  rows.reserve(theta_grid.size());
  for (const double theta : theta_grid) {
    BeamDrive left = drive_template;
    left.theta = theta;
    const BeamDrive right = with_flipped_handedness(left);
    AbsorptionRow row;
    row.theta = theta;
    row.A_left = absorption(left, decay);
    row.A_right = absorption(right, decay);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chiraltp
