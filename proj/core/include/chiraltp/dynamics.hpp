#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace chiraltp {

// Rotating-frame drive of the four-level cascade. Frequencies are nu in
// MHz (the paper's (2pi)MHz convention is handled in the propagator, which
// uses the phase 2*pi*nu*t with t in microseconds). The beam phases never
// appear: the rotated basis absorbs them, leaving only theta and the
// forbidden angle theta_f of the simulated handedness.
struct BeamDrive {
  double Omega1 = 1.0;   // MHz
  double Omega2 = 1.0;   // MHz
  double Delta1 = 0.1;   // MHz, one-photon detuning
  double Delta2 = 0.4;   // MHz, two-photon increment
  double theta = 0.0;    // rad, beam-2 polarization angle
  double theta_f = 0.0;  // rad, forbidden angle of this handedness

  void validate() const;
};

// theta_f -> -theta_f, wrapped back into (-pi, pi]. Swapping handedness of
// the simulated molecule is exactly this replacement.
BeamDrive with_flipped_handedness(BeamDrive drive);

// Principal branch (-pi, pi].
double wrap_principal_angle(double angle);

// 4x4 Hermitian rotating-frame Hamiltonian in MHz, basis order
// (alpha, beta+, beta-, gamma).
Eigen::Matrix4cd build_rotating_hamiltonian(const BeamDrive& drive);

// Closed-system amplitudes c(t) = exp(-i 2pi H t) c(0) on the given time
// grid (microseconds, ascending from 0), via eigendecomposition of H.
std::vector<Eigen::Vector4cd> evolve(const BeamDrive& drive,
                                     const Eigen::Vector4cd& initial,
                                     std::span<const double> t_grid_us);

// Exact infinite-time average of P_gamma(t) from the eigenprojectors of H;
// eigenvalues within 1e-9 MHz are grouped as degenerate.
double time_averaged_P_gamma(const BeamDrive& drive,
                             const Eigen::Vector4cd& initial);

}  // namespace chiraltp
