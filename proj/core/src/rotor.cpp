#include "chiraltp/rotor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chiraltp/errors.hpp"
#include "chiraltp/wigner.hpp"

namespace chiraltp {

namespace {

using cplx = std::complex<double>;

int pm1(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

void MoleculeSpec::validate() const {
  if (A <= 0.0 || B <= 0.0 || C <= 0.0) {
    throw std::invalid_argument(
        "MoleculeSpec: rotational constants must be positive");
  }
  if (d_a == 0.0 && d_b == 0.0 && d_c == 0.0) {
    throw std::invalid_argument(
        "MoleculeSpec: at least one dipole component must be nonzero");
  }
}

SphericalDipole spherical_dipole(const MoleculeSpec& mol) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SphericalDipole mu;
  mu.mu0 = -mol.d_a;
  mu.mu_plus = cplx(mol.d_b, mol.d_c) * inv_sqrt2;
  mu.mu_minus = -cplx(mol.d_b, -mol.d_c) * inv_sqrt2;
  return mu;
}

std::vector<BasisState> build_basis(int J_max, int M) {
  if (J_max < std::abs(M)) {
    throw std::invalid_argument("build_basis: J_max < |M|");
  }
  std::vector<BasisState> basis;
  basis.reserve(static_cast<std::size_t>(block_dimension(J_max, M)));
  for (int J = std::abs(M); J <= J_max; ++J) {
    for (int K = -J; K <= J; ++K) {
      basis.push_back(BasisState{J, K, M});
    }
  }
  return basis;
}

int block_dimension(int J_max, int M) {
  int n = 0;
  for (int J = std::abs(M); J <= J_max; ++J) n += 2 * J + 1;
  return n;
}

int basis_index(int J, int K, int M) {
  int offset = 0;
  for (int Jp = std::abs(M); Jp < J; ++Jp) offset += 2 * Jp + 1;
  return offset + (K + J);
}

double field_free_element(const MoleculeSpec& mol, int J, int K, int Jp,
                          int Kp) {
  if (std::abs(K) > J || std::abs(Kp) > Jp) {
    throw std::invalid_argument("field_free_element: |K| > J");
  }
  if (J != Jp) return 0.0;
  if (Kp == K) {
    return 0.5 * (mol.B + mol.C) * (J * (J + 1) - K * K) + mol.A * K * K;
  }
  if (Kp == K + 2 || Kp == K - 2) {
    const int s = (Kp == K + 2) ? 1 : -1;
    const double x = J * (J + 1) - K * (K + s);
    const double y = J * (J + 1) - (K + s) * (K + 2 * s);
    return 0.25 * (mol.B - mol.C) * std::sqrt(x * y);
  }
  return 0.0;
}

double enantiomer_sign(MatrixKind kind, Handedness h) {
  if (kind == MatrixKind::FieldFree) return 1.0;
  return h == Handedness::Right ? -1.0 : 1.0;
}

std::complex<double> dipole_z_element(const MoleculeSpec& mol,
                                      const BasisState& bra,
                                      const BasisState& ket) {
  if (bra.M != ket.M) return 0.0;
  const SphericalDipole mu = spherical_dipole(mol);
  const double lab =
      std::sqrt(double((2 * bra.J + 1) * (2 * ket.J + 1))) *
      wigner3j(bra.J, 1, ket.J, bra.M, 0, -ket.M);
  if (lab == 0.0) return 0.0;
  cplx body = 0.0;
  const cplx mus[3] = {mu.mu_minus, mu.mu0, mu.mu_plus};
  for (int sigma = -1; sigma <= 1; ++sigma) {
    body += mus[sigma + 1] *
            double(pm1(ket.M + 1 - ket.K + sigma)) *
            wigner3j(bra.J, 1, ket.J, bra.K, -sigma, -ket.K);
  }
  return enantiomer_sign(MatrixKind::Dipole, mol.handedness) * lab * body;
}

std::complex<double> dipole_pm_element(const MoleculeSpec& mol,
                                       const BasisState& bra,
                                       const BasisState& ket, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("dipole_pm_element: sign must be +-1");
  }
  if (bra.M != ket.M + sign) return 0.0;
  const SphericalDipole mu = spherical_dipole(mol);
  const double lab =
      std::sqrt(double((2 * bra.J + 1) * (2 * ket.J + 1))) *
      wigner3j(bra.J, 1, ket.J, bra.M, -sign, -ket.M);
  if (lab == 0.0) return 0.0;
  cplx body = 0.0;
  const cplx mus[3] = {mu.mu_minus, mu.mu0, mu.mu_plus};
  for (int sigma = -1; sigma <= 1; ++sigma) {
    body += mus[sigma + 1] *
            double(pm1(ket.M - ket.K + sigma)) *
            wigner3j(bra.J, 1, ket.J, bra.K, -sigma, -ket.K);
  }
  return enantiomer_sign(MatrixKind::Dipole, mol.handedness) * lab * body;
}

Eigen::MatrixXd field_free_matrix(const MoleculeSpec& mol, int J_max, int M) {
  const auto basis = build_basis(J_max, M);
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = field_free_element(mol, basis[i].J, basis[i].K,
                                          basis[j].J, basis[j].K);
      H(i, j) = v;
      H(j, i) = v;
    }
  }
  return H;
}

Eigen::MatrixXcd dipole_z_matrix(const MoleculeSpec& mol, int J_max, int M) {
  const auto basis = build_basis(J_max, M);
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      D(i, j) = dipole_z_element(mol, basis[i], basis[j]);
    }
  }
  return D;
}

Eigen::MatrixXcd dipole_pm_matrix(const MoleculeSpec& mol, int J_max,
                                  int M_bra, int M_ket, int sign) {
  const auto bras = build_basis(J_max, M_bra);
  const auto kets = build_basis(J_max, M_ket);
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(
      static_cast<int>(bras.size()), static_cast<int>(kets.size()));
  if (M_bra != M_ket + sign) return D;
  for (int i = 0; i < D.rows(); ++i) {
    for (int j = 0; j < D.cols(); ++j) {
      D(i, j) = dipole_pm_element(mol, bras[i], kets[j], sign);
    }
  }
  return D;
}

namespace {

struct Preset {
  const char* name;
  MoleculeSpec mol;
};

// Rotational constants in MHz, dipole components in Debye.
const Preset kPresets[] = {
    {"propanediol-1,2",
     {8572.05, 3640.10, 2790.96, -1.201, -1.916, -0.365, Handedness::Left}},
};

}  // namespace

MoleculeSpec preset(const std::string& name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return p.mol;
  }
  std::ostringstream msg;
  msg << "unknown molecule preset '" << name << "'; available:";
  for (const auto& p : kPresets) msg << " " << p.name;
  throw ConfigError(msg.str());
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

}  // namespace chiraltp
