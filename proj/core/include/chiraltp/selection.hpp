#pragma once

#include <complex>
#include <span>
#include <vector>

#include "chiraltp/rotor.hpp"
#include "chiraltp/stark.hpp"

namespace chiraltp {

// Level selection for the cascade |alpha,0> -> |beta,+-1> -> |gamma,0>.
// alpha and gamma are xi indices of the M = 0 block, beta of the degenerate
// M = +-1 blocks. Valid for either energy ordering of beta and gamma.
struct TransitionTriple {
  int alpha = 1;
  int beta = 1;
  int gamma = 4;

  void validate() const;
};

// The four complex coupling coefficients of the cascade, in Debye:
//   a_+- = <beta,+-1| d.e_+- |alpha,0>,  b_+- = <gamma,0| d.e_+- |beta,-+1>,
// plus the derived forbidden polarization angle.
struct CouplingSet {
  std::complex<double> a_plus;
  std::complex<double> a_minus;
  std::complex<double> b_plus;
  std::complex<double> b_minus;
  double theta_f = 0.0;  // radians in (-pi, pi]
  Handedness handedness = Handedness::Left;
};

struct EnantiomerCouplings {
  CouplingSet left;
  CouplingSet right;
};

// Matrix elements below this magnitude (Debye) count as vanishing and make
// theta_f undefined.
inline constexpr double kVanishingDipoleDebye = 1e-12;

// Contracts eigenvector coefficients with the d.e_+- matrices. The three
// eigensystems must share (E0, J_max) and cover M = 0, +1, -1; the beta
// doublet degeneracy is asserted to 1e-9 MHz. Throws VanishingDipoleError
// if any coefficient magnitude falls below kVanishingDipoleDebye.
CouplingSet couplings_from_eigensystems(const MoleculeSpec& mol,
                                        const StarkEigensystem& block0,
                                        const StarkEigensystem& block_plus,
                                        const StarkEigensystem& block_minus,
                                        const TransitionTriple& triple);

// Diagonalizes the three blocks and evaluates the couplings. For a
// right-handed molecule the eigenvector phases are aligned to the left-
// handed partner via the enantiomer map, so the conjugation relations
// a_+-^(R) = -conj(a_+-^(L)) hold coefficient-by-coefficient.
CouplingSet coupling_coefficients(const MoleculeSpec& mol, double E0,
                                  const TransitionTriple& triple, int J_max);

// Both enantiomers in one pass, sharing the left-handed diagonalization.
EnantiomerCouplings coupling_pair(const MoleculeSpec& mol, double E0,
                                  const TransitionTriple& triple, int J_max);

// Principal-branch argument in (-pi, pi] of -conj(a+) conj(b-) b+ a-.
double forbidden_angle(std::complex<double> a_plus,
                       std::complex<double> a_minus,
                       std::complex<double> b_plus,
                       std::complex<double> b_minus);

// The bracketed factor a- b+ + a+ b- e^{i theta} of the two-photon
// amplitude; zero magnitude at theta = theta_f.
std::complex<double> effective_two_photon_coupling(const CouplingSet& c,
                                                   double theta);

// D = sin^2((theta_f_left - theta_f_right)/2), in [0, 1].
double degree_of_enantiospecificity(double theta_f_left,
                                    double theta_f_right);

struct FieldSweepRow {
  double E0 = 0.0;
  double theta_f_left = 0.0;
  double theta_f_right = 0.0;
  double degree = 0.0;
  bool defined = true;  // false where a transition dipole vanishes
};

// theta_f^(L,R) and D on a field grid, with xi-label continuity carried
// from one grid point to the next. Rows where a dipole vanishes are
// emitted with defined = false instead of aborting the sweep.
std::vector<FieldSweepRow> sweep_field(const MoleculeSpec& mol,
                                       const TransitionTriple& triple,
                                       std::span<const double> E0_grid,
                                       int J_max);

}  // namespace chiraltp
