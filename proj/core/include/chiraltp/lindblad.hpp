#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "chiraltp/dynamics.hpp"

namespace chiraltp {

// Common spontaneous emission rate (MHz) for the five decay channels
// gamma -> beta+-, gamma -> alpha, beta+- -> alpha.
struct DecayModel {
  double kappa = 0.1;  // MHz

  void validate() const;
};

using Liouvillian = Eigen::Matrix<std::complex<double>, 16, 16>;

// Column-stacked generator L with d vec(rho)/dt = L vec(rho), time in
// microseconds (the 2*pi nu-to-omega conversion is folded in). Includes
// the Hamiltonian commutator and the five Lindblad channels at rate kappa.
Liouvillian build_liouvillian(const BeamDrive& drive, const DecayModel& decay);

// Null-space steady state: reshaped, Hermitized and trace-normalized.
// Throws NumericalError("non-unique steady state...") when the kernel is
// not one-dimensional (singular values below 1e-10 relative).
Eigen::Matrix4cd steady_state(const Liouvillian& L);

// Beam-2 absorption A = Im[Tr(rho_ss d_plus)]/(Omega2/2) with
// d_plus = e^{-i theta_f}|beta-><gamma| - e^{-i theta}|beta+><gamma|.
// Requires Omega2 > 0 (probe present).
double absorption(const BeamDrive& drive, const DecayModel& decay);

struct AbsorptionRow {
  double theta = 0.0;
  double A_left = 0.0;
  double A_right = 0.0;
};

// A(theta) for both enantiomers on a theta grid; the right-handed molecule
// is the template drive with theta_f negated.
std::vector<AbsorptionRow> absorption_sweep(const BeamDrive& drive_template,
                                            const DecayModel& decay,
                                            std::span<const double> theta_grid);

}  // namespace chiraltp
