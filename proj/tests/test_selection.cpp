#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "chiraltp/errors.hpp"
#include "chiraltp/rotor.hpp"
#include "chiraltp/selection.hpp"
#include "chiraltp/stark.hpp"

using namespace chiraltp;
using cplx = std::complex<double>;

namespace {

const MoleculeSpec kMol = preset("propanediol-1,2");
constexpr int kJmax = 10;

const std::vector<TransitionTriple> kTriples = {
    {1, 1, 4}, {1, 3, 4}, {1, 3, 2}, {1, 4, 2}};

double wrap(double a) { return std::remainder(a, 2.0 * std::numbers::pi); }

}  // namespace

TEST_CASE("triple validation") {
  CHECK_THROWS_AS((TransitionTriple{0, 1, 4}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((TransitionTriple{1, 1, 1}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((TransitionTriple{1, 4, 2}.validate()));
}

TEST_CASE("forbidden_angle on real coefficient sets") {
  // All real with -conj(a+) conj(b-) b+ a- > 0: theta_f = 0.
  CHECK(forbidden_angle(-1.0, 1.0, 1.0, 1.0) == doctest::Approx(0.0));
  // Product negative: principal branch gives pi.
  CHECK(forbidden_angle(1.0, 1.0, 1.0, 1.0) ==
        doctest::Approx(std::numbers::pi));
}

TEST_CASE("handedness conjugation of the couplings at E0 = 10") {
  for (const auto& triple : kTriples) {
    const EnantiomerCouplings pair = coupling_pair(kMol, 10.0, triple, kJmax);
    const auto& l = pair.left;
    const auto& r = pair.right;
    CHECK(std::abs(r.a_plus + std::conj(l.a_plus)) < 1e-10);
    CHECK(std::abs(r.a_minus + std::conj(l.a_minus)) < 1e-10);
    CHECK(std::abs(r.b_plus + std::conj(l.b_plus)) < 1e-10);
    CHECK(std::abs(r.b_minus + std::conj(l.b_minus)) < 1e-10);
    // theta_f antisymmetry follows.
    CHECK(std::abs(wrap(l.theta_f + r.theta_f)) < 1e-10);
  }
}

TEST_CASE("zero field: the phase product is real") {
  // Evaluate the raw contractions so parity-forbidden transitions (whose
  // coefficients vanish identically at E0 = 0, making theta_f undefined)
  // still exercise the reality property: a zero product is trivially real.
  const auto block0 = diagonalize_block(kMol, 0.0, 0, kJmax);
  const auto blockp = diagonalize_block(kMol, 0.0, +1, kJmax);
  const auto blockm = diagonalize_block(kMol, 0.0, -1, kJmax);
  for (const auto& triple : kTriples) {
    const Eigen::VectorXcd va = block0.eigenvector(triple.alpha);
    const Eigen::VectorXcd vg = block0.eigenvector(triple.gamma);
    const Eigen::VectorXcd vbp = blockp.eigenvector(triple.beta);
    const Eigen::VectorXcd vbm = blockm.eigenvector(triple.beta);
    const auto contract = [](const Eigen::VectorXcd& bra,
                             const Eigen::MatrixXcd& op,
                             const Eigen::VectorXcd& ket) {
      return bra.dot(op * ket);  // Eigen dot conjugates the first factor
    };
    const cplx a_plus =
        contract(vbp, dipole_pm_matrix(kMol, kJmax, +1, 0, +1), va);
    const cplx a_minus =
        contract(vbm, dipole_pm_matrix(kMol, kJmax, -1, 0, -1), va);
    const cplx b_plus =
        contract(vg, dipole_pm_matrix(kMol, kJmax, 0, -1, +1), vbm);
    const cplx b_minus =
        contract(vg, dipole_pm_matrix(kMol, kJmax, 0, +1, -1), vbp);
    const cplx product =
        -std::conj(a_plus) * std::conj(b_minus) * b_plus * a_minus;
    CHECK(std::abs(product.imag()) <=
          1e-10 * std::max(std::abs(product), 1e-30));
  }

  // Where theta_f is defined at E0 = 0 the enantiomers agree, so D = 0.
  for (const auto& triple : {TransitionTriple{1, 1, 4},
                             TransitionTriple{1, 3, 2}}) {
    const EnantiomerCouplings pair = coupling_pair(kMol, 0.0, triple, kJmax);
    CHECK(degree_of_enantiospecificity(pair.left.theta_f,
                                       pair.right.theta_f) <= 1e-8);
  }
  // The other two cascades are parity-forbidden at zero field.
  CHECK_THROWS_AS(coupling_coefficients(kMol, 0.0, {1, 3, 4}, kJmax),
                  VanishingDipoleError);
  CHECK_THROWS_AS(coupling_coefficients(kMol, 0.0, {1, 4, 2}, kJmax),
                  VanishingDipoleError);
}

TEST_CASE("magnitude pairing |a+| = |a-| and |b+| = |b-|") {
  for (const double E0 : {0.0, 5.0, 10.0, 20.0}) {
    const CouplingSet c = coupling_coefficients(kMol, E0, {1, 1, 4}, kJmax);
    CHECK(std::abs(c.a_plus) ==
          doctest::Approx(std::abs(c.a_minus)).epsilon(1e-10));
    CHECK(std::abs(c.b_plus) ==
          doctest::Approx(std::abs(c.b_minus)).epsilon(1e-10));
    CHECK(std::abs(c.a_plus) > kVanishingDipoleDebye);
    CHECK(std::abs(c.b_plus) > kVanishingDipoleDebye);
  }
}

TEST_CASE("pinned regression at E0 = 10, triple (1,1,4)") {
  // Values recorded from the first validated run of this pipeline, after
  // the eigenvalue-residual and conjugation oracles passed.
  const CouplingSet c = coupling_coefficients(kMol, 10.0, {1, 1, 4}, kJmax);
  CHECK(c.theta_f == doctest::Approx(0.24937642146445).epsilon(1e-10));
  CHECK(std::abs(c.a_plus) ==
        doctest::Approx(0.27794908875784).epsilon(1e-9));
  CHECK(std::abs(c.b_plus) ==
        doctest::Approx(0.14492748736867).epsilon(1e-9));
}

TEST_CASE("effective two-photon coupling magnitudes") {
  const CouplingSet c = coupling_coefficients(kMol, 10.0, {1, 1, 4}, kJmax);
  const double ab = std::abs(c.a_plus) * std::abs(c.b_plus);

  CHECK(std::abs(effective_two_photon_coupling(c, c.theta_f)) < 1e-12);
  CHECK(std::abs(effective_two_photon_coupling(
            c, wrap(c.theta_f + std::numbers::pi))) ==
        doctest::Approx(2.0 * ab).epsilon(1e-10));
  CHECK(std::abs(effective_two_photon_coupling(
            c, wrap(c.theta_f + std::numbers::pi / 2.0))) ==
        doctest::Approx(std::sqrt(2.0) * ab).epsilon(1e-10));

  // |f(theta)|^2 = 2(ab)^2 (1 - cos(theta - theta_f)) everywhere.
  for (int k = 0; k < 12; ++k) {
    const double theta = -3.0 + 0.5 * k;
    const double f2 =
        std::norm(effective_two_photon_coupling(c, theta));
    const double law = 2.0 * ab * ab * (1.0 - std::cos(theta - c.theta_f));
    CHECK(f2 == doctest::Approx(law).epsilon(1e-9));
  }
}

TEST_CASE("degree of enantiospecificity") {
  CHECK(degree_of_enantiospecificity(0.7, 0.7) == doctest::Approx(0.0));
  CHECK(degree_of_enantiospecificity(std::numbers::pi / 2.0,
                                     -std::numbers::pi / 2.0) ==
        doctest::Approx(1.0));
}

TEST_CASE("gauge invariance of theta_f under eigenvector rephasing") {
  const auto block0 = diagonalize_block(kMol, 10.0, 0, kJmax);
  const auto blockp = diagonalize_block(kMol, 10.0, +1, kJmax);
  const auto blockm = diagonalize_block(kMol, 10.0, -1, kJmax);
  const TransitionTriple triple{1, 1, 4};
  const double reference =
      couplings_from_eigensystems(kMol, block0, blockp, blockm, triple)
          .theta_f;

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> phase(-std::numbers::pi,
                                               std::numbers::pi);
  for (int trial = 0; trial < 25; ++trial) {
    auto b0 = block0;
    auto bp = blockp;
    auto bm = blockm;
    for (auto* sys : {&b0, &bp, &bm}) {
      for (int k = 0; k < sys->coefficients.cols(); ++k) {
        sys->coefficients.col(k) *= std::polar(1.0, phase(rng));
      }
    }
    const double rotated =
        couplings_from_eigensystems(kMol, b0, bp, bm, triple).theta_f;
    CHECK(std::abs(wrap(rotated - reference)) < 1e-10);
  }
}

TEST_CASE("vanishing dipole raises the dedicated error") {
  // At zero field the (1,3,4) cascade is parity-forbidden, so one of its
  // coefficients vanishes identically.
  CHECK_THROWS_AS(coupling_coefficients(kMol, 0.0, {1, 3, 4}, kJmax),
                  VanishingDipoleError);
}

TEST_CASE("field sweep rows") {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 1.0);
  const auto rows = sweep_field(kMol, {1, 1, 4}, grid, kJmax);
  REQUIRE(rows.size() == grid.size());

  CHECK(rows[0].defined);
  CHECK(rows[0].degree <= 1e-8);
  double max_degree = 0.0;
  for (const auto& row : rows) {
    REQUIRE(row.defined);
    CHECK(std::abs(wrap(row.theta_f_left + row.theta_f_right)) < 1e-10);
    CHECK(row.degree >= 0.0);
    CHECK(row.degree <= 1.0);
    max_degree = std::max(max_degree, row.degree);
  }
  CHECK(max_degree > 0.5);
}

TEST_CASE("field sweep marks undefined rows instead of aborting") {
  const std::vector<double> grid = {0.0, 10.0};
  const auto rows = sweep_field(kMol, {1, 3, 4}, grid, kJmax);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].defined);  // parity-forbidden at zero field
  CHECK(rows[1].defined);
}
