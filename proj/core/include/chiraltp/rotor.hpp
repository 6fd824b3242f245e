#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace chiraltp {

enum class Handedness { Left, Right };

inline char handedness_tag(Handedness h) {
  return h == Handedness::Left ? 'L' : 'R';
}
inline Handedness flipped(Handedness h) {
  return h == Handedness::Left ? Handedness::Right : Handedness::Left;
}

// Rigid asymmetric-top molecule: rotational constants in MHz (nu = E/h),
// body-frame dipole components along the principal axes a,b,c in Debye.
// The constants follow the I_a < I_b, I_c convention (A largest).
struct MoleculeSpec {
  double A = 0.0;  // MHz
  double B = 0.0;  // MHz
  double C = 0.0;  // MHz
  double d_a = 0.0;  // Debye
  double d_b = 0.0;  // Debye
  double d_c = 0.0;  // Debye
  Handedness handedness = Handedness::Left;

  // Throws std::invalid_argument on non-positive constants or an all-zero
  // dipole. A violated A > B, A > C ordering is legal but suspicious; use
  // prolate_ordering_ok() to decide whether to warn.
  void validate() const;
  bool prolate_ordering_ok() const { return A > B && A > C; }

  MoleculeSpec with_handedness(Handedness h) const {
    MoleculeSpec m = *this;
    m.handedness = h;
    return m;
  }
};

// Symmetric-top basis ket |J,K,M>.
struct BasisState {
  int J = 0;
  int K = 0;
  int M = 0;
  bool operator==(const BasisState&) const = default;
};

// Body-frame spherical dipole components mu_0 = -d_a,
// mu_{+-} = +-(d_b +- i d_c)/sqrt(2).
struct SphericalDipole {
  std::complex<double> mu0;
  std::complex<double> mu_plus;
  std::complex<double> mu_minus;
};

SphericalDipole spherical_dipole(const MoleculeSpec& mol);

// Ordered M-block basis: ascending J from |M| to J_max, then ascending K.
// Throws std::invalid_argument if J_max < |M|.
std::vector<BasisState> build_basis(int J_max, int M);

// Number of states in the M-block truncated at J_max.
int block_dimension(int J_max, int M);

// Index of |J,K> within build_basis(J_max, M); the basis is dense so the
// index is arithmetic.
int basis_index(int J, int K, int M);

// <J,K|H_F|J',K'> in MHz. Zero unless J = J' and K' in {K, K+-2}.
// Independent of M and of handedness.
double field_free_element(const MoleculeSpec& mol, int J, int K, int Jp,
                          int Kp);

// Sign rule relating right-handed matrices to left-handed ones:
// the field-free matrix is unchanged, every dipole matrix is negated.
enum class MatrixKind { FieldFree, Dipole };
double enantiomer_sign(MatrixKind kind, Handedness h);

// <bra| d.e_z |ket> in Debye; zero unless M = M'. Carries the handedness
// sign of mol.
std::complex<double> dipole_z_element(const MoleculeSpec& mol,
                                      const BasisState& bra,
                                      const BasisState& ket);

// <bra| d.e_{+-} |ket| in Debye; sign must be +1 or -1. Zero unless
// M_bra = M_ket +- 1.
std::complex<double> dipole_pm_element(const MoleculeSpec& mol,
                                       const BasisState& bra,
                                       const BasisState& ket, int sign);

// Dense per-block matrices in build_basis order.
Eigen::MatrixXd field_free_matrix(const MoleculeSpec& mol, int J_max, int M);
Eigen::MatrixXcd dipole_z_matrix(const MoleculeSpec& mol, int J_max, int M);
// Rectangular block <M_bra| d.e_sign |M_ket>; zero matrix unless
// M_bra = M_ket + sign.
Eigen::MatrixXcd dipole_pm_matrix(const MoleculeSpec& mol, int J_max,
                                  int M_bra, int M_ket, int sign);

// Molecule preset registry. preset() throws ConfigError for unknown names
// (the message lists the available presets).
MoleculeSpec preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace chiraltp
