#pragma once

#include <Eigen/Dense>

#include "chiraltp/rotor.hpp"

namespace chiraltp {

// Eigen-decomposition of one M-block of H0(E0) = H_F - E0 d.e_z.
//
// Eigenvectors live in build_basis(J_max, M) order, one per column,
// with column xi-1 holding the xi-th state (energies ascending). Each
// eigenvector phase is fixed so the largest-magnitude coefficient is real
// and positive (ties within 1e-12 broken by lowest basis index).
struct StarkEigensystem {
  int M = 0;
  double E0 = 0.0;  // kV/cm
  int J_max = 0;
  Eigen::VectorXd energies;       // MHz, ascending
  Eigen::MatrixXcd coefficients;  // column xi-1 = S_{xi,J,K;M}

  int dim() const { return static_cast<int>(energies.size()); }
  // xi is 1-based, matching the level labels.
  Eigen::VectorXcd eigenvector(int xi) const {
    return coefficients.col(xi - 1);
  }
  double energy(int xi) const { return energies(xi - 1); }
};

// Diagonalizes the M-block at field strength E0 (kV/cm) with basis
// truncation J_max. When `previous` is given (a decomposition of the same
// block at a nearby E0), near-degenerate levels (within 1e-9 MHz) are
// ordered by descending overlap with the previous eigenvectors so that the
// xi labels stay continuous along a field sweep.
//
// Preconditions: E0 >= 0 and J_max >= |M| + 2.
StarkEigensystem diagonalize_block(const MoleculeSpec& mol, double E0, int M,
                                   int J_max,
                                   const StarkEigensystem* previous = nullptr);

// Smallest J_max such that the lowest `levels_needed` energies move by less
// than rel_tol (relative) when J_max -> J_max + 2. Throws ConvergenceError
// if not reached by J_max = 40.
int converge_J_max(const MoleculeSpec& mol, double E0, int M,
                   int levels_needed, double rel_tol);

// Rephases each eigenvector of `right` so that it matches the image of the
// corresponding `left` eigenvector under the antiunitary enantiomer map
// (spatial inversion combined with a pi rotation about x and time reversal,
// which in this basis sends S_{J,K} to (-1)^(J+M-K) conj(S_{J,-K})). The
// per-coefficient conjugation relations between left- and right-handed
// coupling coefficients hold only in this relative gauge.
//
// `right` and `left` must come from the same |M|-block truncation; throws
// NumericalError if an eigenvector pair fails to correspond (overlap
// magnitude below 0.9).
void align_enantiomer_phases(StarkEigensystem& right,
                             const StarkEigensystem& left);

}  // namespace chiraltp
