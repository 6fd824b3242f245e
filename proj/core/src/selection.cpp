#include "chiraltp/selection.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "chiraltp/errors.hpp"

namespace chiraltp {

namespace {

using cplx = std::complex<double>;

constexpr double kBetaDegeneracyMHz = 1e-9;

void check_magnitude(const char* name, cplx v) {
  if (std::abs(v) < kVanishingDipoleDebye) {
    std::ostringstream msg;
    msg << "transition dipole vanishes: |" << name << "| = " << std::abs(v)
        << " Debye; theta_f undefined for this triple";
    throw VanishingDipoleError(msg.str());
  }
}

double wrap_principal(double angle) {
  // Map to (-pi, pi].
  angle = std::remainder(angle, 2.0 * std::numbers::pi);
  if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
  return angle;
}

}  // namespace

void TransitionTriple::validate() const {
  if (alpha < 1 || beta < 1 || gamma < 1) {
    throw std::invalid_argument("TransitionTriple: indices must be >= 1");
  }
  if (alpha == gamma) {
    throw std::invalid_argument("TransitionTriple: alpha must differ from gamma");
  }
}

CouplingSet couplings_from_eigensystems(const MoleculeSpec& mol,
                                        const StarkEigensystem& block0,
                                        const StarkEigensystem& block_plus,
                                        const StarkEigensystem& block_minus,
                                        const TransitionTriple& triple) {
  triple.validate();
  if (block0.M != 0 || block_plus.M != 1 || block_minus.M != -1) {
    throw std::invalid_argument(
        "couplings_from_eigensystems: blocks must cover M = 0, +1, -1");
  }
  if (block0.J_max != block_plus.J_max || block0.J_max != block_minus.J_max ||
      block0.E0 != block_plus.E0 || block0.E0 != block_minus.E0) {
    throw std::invalid_argument(
        "couplings_from_eigensystems: blocks must share (E0, J_max)");
  }
  if (std::max(triple.alpha, triple.gamma) > block0.dim() ||
      triple.beta > block_plus.dim()) {
    throw std::invalid_argument(
        "couplings_from_eigensystems: triple index beyond block dimension");
  }
  const double split = std::abs(block_plus.energy(triple.beta) -
                                block_minus.energy(triple.beta));
  if (split > kBetaDegeneracyMHz) {
    std::ostringstream msg;
    msg << "beta doublet not degenerate: |eps(+1) - eps(-1)| = " << split
        << " MHz";
    throw NumericalError(msg.str());
  }

  const int J_max = block0.J_max;
  const Eigen::VectorXcd v_alpha = block0.eigenvector(triple.alpha);
  const Eigen::VectorXcd v_gamma = block0.eigenvector(triple.gamma);
  const Eigen::VectorXcd v_beta_p = block_plus.eigenvector(triple.beta);
  const Eigen::VectorXcd v_beta_m = block_minus.eigenvector(triple.beta);

  const Eigen::MatrixXcd Dp_10 = dipole_pm_matrix(mol, J_max, +1, 0, +1);
  const Eigen::MatrixXcd Dm_m10 = dipole_pm_matrix(mol, J_max, -1, 0, -1);
  const Eigen::MatrixXcd Dp_0m1 = dipole_pm_matrix(mol, J_max, 0, -1, +1);
  const Eigen::MatrixXcd Dm_0p1 = dipole_pm_matrix(mol, J_max, 0, +1, -1);

  CouplingSet c;
  c.handedness = mol.handedness;
  c.a_plus = (v_beta_p.adjoint() * Dp_10 * v_alpha)(0);
  c.a_minus = (v_beta_m.adjoint() * Dm_m10 * v_alpha)(0);
  c.b_plus = (v_gamma.adjoint() * Dp_0m1 * v_beta_m)(0);
  c.b_minus = (v_gamma.adjoint() * Dm_0p1 * v_beta_p)(0);

  check_magnitude("a_plus", c.a_plus);
  check_magnitude("a_minus", c.a_minus);
  check_magnitude("b_plus", c.b_plus);
  check_magnitude("b_minus", c.b_minus);

  c.theta_f = forbidden_angle(c.a_plus, c.a_minus, c.b_plus, c.b_minus);
  return c;
}

CouplingSet coupling_coefficients(const MoleculeSpec& mol, double E0,
                                  const TransitionTriple& triple, int J_max) {
  if (mol.handedness == Handedness::Right) {
    return coupling_pair(mol.with_handedness(Handedness::Left), E0, triple,
                         J_max)
        .right;
  }
  const auto b0 = diagonalize_block(mol, E0, 0, J_max);
  const auto bp = diagonalize_block(mol, E0, +1, J_max);
  const auto bm = diagonalize_block(mol, E0, -1, J_max);
  return couplings_from_eigensystems(mol, b0, bp, bm, triple);
}

EnantiomerCouplings coupling_pair(const MoleculeSpec& mol, double E0,
                                  const TransitionTriple& triple, int J_max) {
  const MoleculeSpec left = mol.with_handedness(Handedness::Left);
  const MoleculeSpec right = mol.with_handedness(Handedness::Right);

  const auto b0_L = diagonalize_block(left, E0, 0, J_max);
  const auto bp_L = diagonalize_block(left, E0, +1, J_max);
  const auto bm_L = diagonalize_block(left, E0, -1, J_max);

  auto b0_R = diagonalize_block(right, E0, 0, J_max);
  auto bp_R = diagonalize_block(right, E0, +1, J_max);
  auto bm_R = diagonalize_block(right, E0, -1, J_max);
  align_enantiomer_phases(b0_R, b0_L);
  align_enantiomer_phases(bp_R, bp_L);
  align_enantiomer_phases(bm_R, bm_L);

  EnantiomerCouplings pair;
  pair.left = couplings_from_eigensystems(left, b0_L, bp_L, bm_L, triple);
  pair.right = couplings_from_eigensystems(right, b0_R, bp_R, bm_R, triple);
  return pair;
}

double forbidden_angle(cplx a_plus, cplx a_minus, cplx b_plus, cplx b_minus) {
  const cplx product = -std::conj(a_plus) * std::conj(b_minus) * b_plus *
                       a_minus;
  if (std::abs(product) <
      kVanishingDipoleDebye * kVanishingDipoleDebye *
          kVanishingDipoleDebye * kVanishingDipoleDebye) {
    throw VanishingDipoleError(
        "forbidden_angle: coupling product magnitude vanishes");
  }
  return wrap_principal(std::arg(product));
}

cplx effective_two_photon_coupling(const CouplingSet& c, double theta) {
  return c.a_minus * c.b_plus +
         c.a_plus * c.b_minus * std::polar(1.0, theta);
}

double degree_of_enantiospecificity(double theta_f_left,
                                    double theta_f_right) {
  const double s = std::sin(0.5 * (theta_f_left - theta_f_right));
  return s * s;
}

std::vector<FieldSweepRow> sweep_field(const MoleculeSpec& mol,
                                       const TransitionTriple& triple,
                                       std::span<const double> E0_grid,
                                       int J_max) {
  if (E0_grid.empty()) {
    throw std::invalid_argument("sweep_field: empty E0 grid");
  }
  triple.validate();

  const MoleculeSpec left = mol.with_handedness(Handedness::Left);
  const MoleculeSpec right = mol.with_handedness(Handedness::Right);

  std::vector<FieldSweepRow> rows;
  rows.reserve(E0_grid.size());

  StarkEigensystem prev0_L, prevP_L, prevM_L, prev0_R, prevP_R, prevM_R;
  bool have_prev = false;

  for (const double E0 : E0_grid) {
    const StarkEigensystem* p0L = have_prev ? &prev0_L : nullptr;
    const StarkEigensystem* pPL = have_prev ? &prevP_L : nullptr;
    const StarkEigensystem* pML = have_prev ? &prevM_L : nullptr;
    const StarkEigensystem* p0R = have_prev ? &prev0_R : nullptr;
    const StarkEigensystem* pPR = have_prev ? &prevP_R : nullptr;
    const StarkEigensystem* pMR = have_prev ? &prevM_R : nullptr;

    auto b0_L = diagonalize_block(left, E0, 0, J_max, p0L);
    auto bp_L = diagonalize_block(left, E0, +1, J_max, pPL);
    auto bm_L = diagonalize_block(left, E0, -1, J_max, pML);
    auto b0_R = diagonalize_block(right, E0, 0, J_max, p0R);
    auto bp_R = diagonalize_block(right, E0, +1, J_max, pPR);
    auto bm_R = diagonalize_block(right, E0, -1, J_max, pMR);

    FieldSweepRow row;
    row.E0 = E0;
    try {
      auto b0_Ra = b0_R;
      auto bp_Ra = bp_R;
      auto bm_Ra = bm_R;
      align_enantiomer_phases(b0_Ra, b0_L);
      align_enantiomer_phases(bp_Ra, bp_L);
      align_enantiomer_phases(bm_Ra, bm_L);
      const auto cL = couplings_from_eigensystems(left, b0_L, bp_L, bm_L, triple);
      const auto cR =
          couplings_from_eigensystems(right, b0_Ra, bp_Ra, bm_Ra, triple);
      row.theta_f_left = cL.theta_f;
      row.theta_f_right = cR.theta_f;
      row.degree = degree_of_enantiospecificity(cL.theta_f, cR.theta_f);
    } catch (const VanishingDipoleError&) {
      row.defined = false;
    }
    rows.push_back(row);

    prev0_L = std::move(b0_L);
    prevP_L = std::move(bp_L);
    prevM_L = std::move(bm_L);
    prev0_R = std::move(b0_R);
    prevP_R = std::move(bp_R);
    prevM_R = std::move(bm_R);
    have_prev = true;
  }
  return rows;
}

}  // namespace chiraltp
