#include "chiraltp/stark.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "chiraltp/errors.hpp"
#include "chiraltp/units.hpp"

namespace chiraltp {

namespace {

constexpr double kDegeneracyMHz = 1e-9;
constexpr double kPhaseTieTol = 1e-12;

// Largest-magnitude coefficient index, ties broken by lowest index.
int dominant_index(const Eigen::VectorXcd& v) {
  double best = -1.0;
  int idx = 0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best + kPhaseTieTol) {
      best = a;
      idx = i;
    }
  }
  return idx;
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  const int i = dominant_index(v);
  const std::complex<double> c = v(i);
  const double a = std::abs(c);
  if (a > 0.0) v *= std::conj(c) / a;
}

// Reorders columns inside each near-degenerate group by descending overlap
// with the previous eigenvectors at the same labels.
void relabel_degenerate(Eigen::VectorXd& w, Eigen::MatrixXcd& V,
                        const StarkEigensystem* previous) {
  const int n = static_cast<int>(w.size());
  int lo = 0;
  while (lo < n) {
    int hi = lo;
    while (hi + 1 < n && w(hi + 1) - w(hi) <= kDegeneracyMHz) ++hi;
    if (hi > lo) {
      std::vector<int> order(hi - lo + 1);
      std::iota(order.begin(), order.end(), 0);
      if (previous != nullptr && previous->dim() == n) {
        // Greedy assignment: each slot takes the group member with the
        // largest overlap against the previous eigenvector of that label.
        std::vector<bool> used(order.size(), false);
        std::vector<int> assigned(order.size(), -1);
        for (std::size_t slot = 0; slot < order.size(); ++slot) {
          const Eigen::VectorXcd ref =
              previous->coefficients.col(lo + static_cast<int>(slot));
          double best = -1.0;
          int pick = -1;
          for (std::size_t k = 0; k < order.size(); ++k) {
            if (used[k]) continue;
            const double ov = std::abs(ref.dot(V.col(lo + static_cast<int>(k))));
            if (ov > best) {
              best = ov;
              pick = static_cast<int>(k);
            }
          }
          used[static_cast<std::size_t>(pick)] = true;
          assigned[slot] = pick;
        }
        for (std::size_t slot = 0; slot < order.size(); ++slot) {
          order[slot] = assigned[slot];
        }
      } else {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          return dominant_index(V.col(lo + a)) < dominant_index(V.col(lo + b));
        });
      }
      Eigen::MatrixXcd cols(V.rows(), static_cast<int>(order.size()));
      Eigen::VectorXd vals(static_cast<int>(order.size()));
      for (std::size_t k = 0; k < order.size(); ++k) {
        cols.col(static_cast<int>(k)) = V.col(lo + order[k]);
        vals(static_cast<int>(k)) = w(lo + order[k]);
      }
      V.middleCols(lo, cols.cols()) = cols;
      w.segment(lo, vals.size()) = vals;
    }
    lo = hi + 1;
  }
}

}  // namespace

StarkEigensystem diagonalize_block(const MoleculeSpec& mol, double E0, int M,
                                   int J_max,
                                   const StarkEigensystem* previous) {
  if (E0 < 0.0) throw std::invalid_argument("diagonalize_block: E0 < 0");
  if (J_max < std::abs(M) + 2) {
    throw std::invalid_argument("diagonalize_block: J_max < |M| + 2");
  }
  mol.validate();

  Eigen::MatrixXcd H = field_free_matrix(mol, J_max, M).cast<std::complex<double>>();
  if (E0 > 0.0) {
    H -= (E0 * kStarkMHzPerDebyeKVcm) * dipole_z_matrix(mol, J_max, M);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver failed for block M=" << M << " E0=" << E0
        << " J_max=" << J_max;
    throw NumericalError(msg.str());
  }

  StarkEigensystem sys;
  sys.M = M;
  sys.E0 = E0;
  sys.J_max = J_max;
  sys.energies = solver.eigenvalues();
  sys.coefficients = solver.eigenvectors();

  relabel_degenerate(sys.energies, sys.coefficients, previous);
  for (int k = 0; k < sys.coefficients.cols(); ++k) {
    fix_phase(sys.coefficients.col(k));
  }
  return sys;
}

int converge_J_max(const MoleculeSpec& mol, double E0, int M,
                   int levels_needed, double rel_tol) {
  if (rel_tol <= 0.0) {
    throw std::invalid_argument("converge_J_max: rel_tol must be positive");
  }
  if (levels_needed < 1) {
    throw std::invalid_argument("converge_J_max: levels_needed must be >= 1");
  }
  constexpr int kJmaxCap = 40;

  int J0 = std::abs(M) + 2;
  while (block_dimension(J0, M) < levels_needed) ++J0;

  auto lowest = [&](int J_max) {
    return diagonalize_block(mol, E0, M, J_max)
        .energies.head(levels_needed)
        .eval();
  };

  Eigen::VectorXd at_J = lowest(J0);
  for (int J = J0; J <= kJmaxCap; ++J) {
    const Eigen::VectorXd at_J2 = lowest(J + 2);
    double worst = 0.0;
    for (int k = 0; k < levels_needed; ++k) {
      const double scale = std::max(std::abs(at_J2(k)), 1.0);
      worst = std::max(worst, std::abs(at_J(k) - at_J2(k)) / scale);
    }
    if (worst < rel_tol) return J;
    at_J = lowest(J + 1);
  }
  std::ostringstream msg;
  msg << "converge_J_max: no convergence by J_max=" << kJmaxCap << " (M=" << M
      << ", E0=" << E0 << ", rel_tol=" << rel_tol << ")";
  throw ConvergenceError(msg.str());
}

void align_enantiomer_phases(StarkEigensystem& right,
                             const StarkEigensystem& left) {
  if (right.M != left.M || right.J_max != left.J_max ||
      right.dim() != left.dim()) {
    throw std::invalid_argument(
        "align_enantiomer_phases: mismatched eigensystems");
  }
  const auto basis = build_basis(left.J_max, left.M);
  const int n = left.dim();
  const int M = left.M;

  for (int col = 0; col < n; ++col) {
    // Image of the left eigenvector under the enantiomer map:
    // u_{J,-K} = (-1)^(J+M-K) conj(v_{J,K}).
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < n; ++i) {
      const auto& s = basis[i];
      const int j = basis_index(s.J, -s.K, M);
      const double sign = ((s.J + M - s.K) % 2 == 0) ? 1.0 : -1.0;
      u(j) = sign * std::conj(left.coefficients(i, col));
    }
    const std::complex<double> ov =
        (right.coefficients.col(col).adjoint() * u)(0);
    const double mag = std::abs(ov);
    if (mag < 0.9) {
      std::ostringstream msg;
      msg << "align_enantiomer_phases: level " << (col + 1) << " of block M="
          << M << " does not correspond across handedness (overlap " << mag
          << ")";
      throw NumericalError(msg.str());
    }
    right.coefficients.col(col) *= ov / mag;
  }
}

}  // namespace chiraltp
