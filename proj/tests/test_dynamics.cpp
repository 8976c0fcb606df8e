#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lenscoupled/dynamics.hpp"
#include "lenscoupled/errors.hpp"

namespace ld = lenscoupled::dynamics;
using lenscoupled::cplx;

namespace {

const cplx kI{0.0, 1.0};
const cplx kWorkingPoint{0.4, -0.075};

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

ld::OracleSolution oracle(cplx g, const ld::DriveSpec& d, double Gamma = 1.0,
                          ld::DriveTargets t = ld::DriveTargets::a1) {
  return ld::lindblad_steady_state(g.real() * Gamma, 2.0 * g.imag() * Gamma, d, Gamma, t);
}

struct Sample {
  cplx g;
  ld::DriveSpec drive;
};

// Weak drive relative to the narrowest collective linewidth.
std::vector<Sample> low_saturation_samples(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const double mag = 0.5 * uni(rng);
    const double arg = 2.0 * M_PI * uni(rng);
    const cplx g = std::polar(mag, arg);
    const double s = 0.01 + 0.09 * uni(rng);
    const double delta = -2.0 + 4.0 * uni(rng);
    const auto d = ld::DriveSpec::from_saturation(s, delta);
    if (!ld::is_low_saturation(d.omega(1.0), 2.0 * g.imag(), 1.0)) continue;
    out.push_back({g, d});
  }
  return out;
}

}  // namespace

TEST(Drive, SaturationNormalization) {
  EXPECT_DOUBLE_EQ(ld::omega_for_saturation(0.1, 0.0, 1.0), 0.05);
  EXPECT_NEAR(ld::omega_for_saturation(0.1, 10.0, 1.0), 0.1 * std::sqrt(100.25), 1e-15);
  EXPECT_DOUBLE_EQ(ld::omega_for_saturation(0.2, 0.3, 1.0), 2.0 * ld::omega_for_saturation(0.1, 0.3, 1.0));
  EXPECT_THROW(ld::omega_for_saturation(0.0, 0.0, 1.0), lenscoupled::DomainError);
}

TEST(Drive, Validation) {
  EXPECT_THROW(ld::DriveSpec::from_saturation(0.31), lenscoupled::DomainError);
  EXPECT_THROW(ld::DriveSpec::from_saturation(-0.1), lenscoupled::DomainError);
  EXPECT_THROW(ld::DriveSpec::from_rabi(-1.0), lenscoupled::DomainError);
  ld::DriveSpec both;
  both.rabi = 0.1;
  both.saturation = 0.1;
  EXPECT_THROW(both.validate(), lenscoupled::DomainError);
  ld::DriveSpec none;
  EXPECT_THROW(none.validate(), lenscoupled::DomainError);
  EXPECT_DOUBLE_EQ(ld::DriveSpec::from_rabi(0.2, 3.0).omega(1.0), 0.2);
}

TEST(Analytic, UncoupledAtom) {
  const auto d = ld::DriveSpec::from_rabi(0.05, 0.0);
  const auto ss = ld::steady_state_analytic(0.0, d, 1.0);
  EXPECT_NEAR(std::abs(ss.sigma1), 0.1, 1e-15);
  EXPECT_EQ(ss.sigma2, cplx(0.0));
  EXPECT_EQ(ss.n2, 0.0);
  EXPECT_NEAR(ss.n1, 0.01, 1e-15);
  const auto dd = ld::DriveSpec::from_rabi(0.07, 0.8);
  const auto s2 = ld::steady_state_analytic(0.0, dd, 1.0);
  EXPECT_LT(std::abs(s2.sigma1 - (-kI * 0.07 / (kI * 0.8 - 0.5))), 1e-15);
}

TEST(Analytic, SecondAtomFollowsFirst) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int t = 0; t < 50; ++t) {
    const cplx g{u(rng), u(rng)};
    const double Gamma = 3.7;
    const auto d = ld::DriveSpec::from_saturation(0.05, 4.0 * u(rng) * Gamma);
    const auto ss = ld::steady_state_analytic(g, d, Gamma);
    EXPECT_LT(std::abs(ss.sigma2 - 2.0 * kI * g * ss.sigma1), 1e-15);
    EXPECT_DOUBLE_EQ(ss.xi, 2.0 * ss.corr.real());
  }
}

TEST(Analytic, ModesAgreeOnResonance) {
  const auto d = ld::DriveSpec::from_saturation(0.1);
  const auto a = ld::steady_state_analytic(kWorkingPoint, d, 1.0, ld::AnalyticMode::as_printed);
  const auto b = ld::steady_state_analytic(kWorkingPoint, d, 1.0, ld::AnalyticMode::full_detuning);
  EXPECT_LT(std::abs(a.sigma1 - b.sigma1), 1e-15);
  EXPECT_LT(std::abs(a.sigma2 - b.sigma2), 1e-15);
  const auto off = ld::DriveSpec::from_saturation(0.1, 0.7);
  const auto c = ld::steady_state_analytic(kWorkingPoint, off, 1.0, ld::AnalyticMode::as_printed);
  const auto e = ld::steady_state_analytic(kWorkingPoint, off, 1.0, ld::AnalyticMode::full_detuning);
  EXPECT_GT(std::abs(c.sigma2 - e.sigma2), 1e-3 * std::abs(c.sigma2));
}

TEST(Analytic, SingularDenominator) {
  // i delta - Gamma/2 - 2 G^2 / Gamma = 0 at delta = 0, G = i Gamma / 2.
  EXPECT_THROW(ld::steady_state_analytic({0.0, 0.5}, ld::DriveSpec::from_saturation(0.1), 1.0),
               lenscoupled::SingularParameterError);
}

TEST(Correlation, EstimatorsAgree) {
  for (const auto& smp : low_saturation_samples(17, 100)) {
    const auto f = ld::cross_correlation(smp.g, smp.drive, 1.0, ld::CorrelationEstimator::factorized);
    const auto ab = ld::cross_correlation(smp.g, smp.drive, 1.0, ld::CorrelationEstimator::alpha_beta);
    if (std::abs(f) == 0.0) continue;
    EXPECT_LE(rel(ab, f), 0.1);
  }
  EXPECT_EQ(ld::cross_correlation(0.0, ld::DriveSpec::from_saturation(0.1), 1.0,
                                  ld::CorrelationEstimator::alpha_beta),
            cplx(0.0));
  EXPECT_EQ(ld::cross_correlation(0.0, ld::DriveSpec::from_saturation(0.1), 1.0,
                                  ld::CorrelationEstimator::factorized),
            cplx(0.0));
}

TEST(Correlation, EstimatorsMatchOracleAtWorkingPoint) {
  const auto d = ld::DriveSpec::from_saturation(0.05);
  const auto o = oracle(kWorkingPoint, d).state;
  for (auto est : {ld::CorrelationEstimator::factorized, ld::CorrelationEstimator::alpha_beta})
    EXPECT_LE(rel(ld::cross_correlation(kWorkingPoint, d, 1.0, est), o.corr), 0.05);
}

TEST(Oracle, NoDriveIsGroundState) {
  const auto o = ld::lindblad_steady_state(0.3, 0.2, ld::DriveSpec::from_rabi(0.0), 1.0);
  EXPECT_NEAR(std::abs(o(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(o.state.n1, 0.0, 1e-12);
  EXPECT_NEAR(o.state.n2, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(o.state.corr), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(o.state.sigma1), 0.0, 1e-12);
}

TEST(Oracle, IndependentAtomClosedForm) {
  for (double delta : {0.0, 0.4, -1.3}) {
    for (double omega : {0.025, 0.2, 1.0}) {
      const auto o = ld::lindblad_steady_state(0.0, 0.0, ld::DriveSpec::from_rabi(omega, delta), 1.0).state;
      const double ree = omega * omega / (0.25 + delta * delta + 2.0 * omega * omega);
      EXPECT_NEAR(o.n1, ree, 1e-12);
      EXPECT_NEAR(o.n2, 0.0, 1e-12);
    }
  }
  const auto o = ld::lindblad_steady_state(0.0, 0.0, ld::DriveSpec::from_saturation(0.05), 1.0).state;
  EXPECT_LE(rel(o.n1, 0.0025), 0.05);
}

TEST(Oracle, BothDrivenIndependentAtoms) {
  const auto d = ld::DriveSpec::from_rabi(0.3, 0.2);
  const auto o = ld::lindblad_steady_state(0.0, 0.0, d, 1.0, ld::DriveTargets::both).state;
  EXPECT_NEAR(o.n1, o.n2, 1e-12);
  EXPECT_NEAR(std::abs(o.corr - std::conj(o.sigma1) * o.sigma2), 0.0, 1e-12);
}

TEST(Oracle, DensityMatrixIsPhysical) {
  for (const auto& smp : low_saturation_samples(99, 20)) {
    const auto o = oracle(smp.g, smp.drive);
    Eigen::Matrix4cd rho;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) rho(r, c) = o(r, c);
    EXPECT_LE((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(rho.trace().imag(), 0.0, 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (rho + rho.adjoint()));
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(Oracle, PhysicalityAndRank) {
  const auto d = ld::DriveSpec::from_saturation(0.05);
  EXPECT_THROW(ld::lindblad_steady_state(0.0, 1.01, d, 1.0), lenscoupled::PhysicalityError);
  EXPECT_THROW(ld::lindblad_steady_state(0.0, 1.0, ld::DriveSpec::from_rabi(0.0), 1.0),
               lenscoupled::NumericalRankError);
}

TEST(Oracle, WorkingPointPopulations) {
  const auto d = ld::DriveSpec::from_saturation(0.05);
  const auto a = ld::steady_state_analytic(kWorkingPoint, d, 1.0);
  const auto o = oracle(kWorkingPoint, d).state;
  EXPECT_LE(rel(a.n1, o.n1), 0.05);
  EXPECT_LE(rel(a.n2, o.n2), 0.05);
}

TEST(Oracle, AgreesWithClosedFormOverRandomSweep) {
  for (const auto& smp : low_saturation_samples(2025, 50)) {
    const auto a = ld::steady_state_analytic(smp.g, smp.drive, 1.0, ld::AnalyticMode::full_detuning);
    const auto o = oracle(smp.g, smp.drive).state;
    EXPECT_LE(rel(a.sigma1, o.sigma1), 0.05) << smp.g;
    EXPECT_LE(rel(a.n1, o.n1), 0.05) << smp.g;
    if (std::abs(smp.g) < 1e-6) continue;
    EXPECT_LE(rel(a.sigma2, o.sigma2), 0.05) << smp.g;
    EXPECT_LE(rel(a.n2, o.n2), 0.05) << smp.g;
    EXPECT_LE(rel(a.corr, o.corr), 0.10) << smp.g;
  }
}

TEST(Oracle, CorrelationFactorizes) {
  for (const auto& smp : low_saturation_samples(404, 30)) {
    const auto o = oracle(smp.g, smp.drive).state;
    const cplx fact = std::conj(o.sigma1) * o.sigma2;
    EXPECT_LE(std::abs(o.corr - fact), 0.1 * std::abs(fact)) << smp.g;
  }
}

TEST(Oracle, PopulationsScaleQuadratically) {
  const double Gamma = 1.0;
  for (double s : {0.05, 0.03}) {
    const auto big = oracle(kWorkingPoint, ld::DriveSpec::from_saturation(s), Gamma).state;
    const auto small = oracle(kWorkingPoint, ld::DriveSpec::from_saturation(s / 2), Gamma).state;
    EXPECT_NEAR(big.n1 / small.n1, 4.0, 0.08);
    EXPECT_NEAR(big.n2 / small.n2, 4.0, 0.08);
  }
}

TEST(Oracle, UnitIndependence) {
  // Same physics in rad/s.
  const double Gamma = 2.0 * M_PI * 5.23e6;
  const auto d1 = ld::DriveSpec::from_saturation(0.05, 0.3);
  const auto d2 = ld::DriveSpec::from_saturation(0.05, 0.3 * Gamma);
  const auto a = oracle(kWorkingPoint, d1).state;
  const auto b = oracle(kWorkingPoint, d2, Gamma).state;
  EXPECT_NEAR(a.n1, b.n1, 1e-12);
  EXPECT_LT(std::abs(a.corr - b.corr), 1e-12);
}

TEST(Potential, SignAndLinearity) {
  EXPECT_EQ(ld::potential_energy(0.4, 0.0), -0.0);
  EXPECT_LT(ld::potential_energy(0.4, 0.01), 0.0);
  EXPECT_EQ(ld::potential_energy(-0.4, 0.01), -ld::potential_energy(0.4, 0.01));
}

TEST(Spectrum, FlatWithoutCoupling) {
  std::vector<double> grid;
  for (int i = -20; i <= 20; ++i) grid.push_back(0.25 * i);
  for (const auto& p : ld::excitation_spectrum(0.0, 0.1, grid, 1.0)) {
    EXPECT_NEAR(p.n1_over_s2, 1.0, 1e-12);
    EXPECT_EQ(p.xi_over_s2, 0.0);
  }
}

TEST(Spectrum, SymmetricForRealCoupling) {
  std::vector<double> grid;
  for (int i = -10; i <= 10; ++i) grid.push_back(0.3 * i);
  const auto sp = ld::excitation_spectrum({0.4, 0.0}, 0.1, grid, 1.0);
  for (std::size_t i = 0; i < sp.size(); ++i)
    EXPECT_NEAR(sp[i].n1_over_s2, sp[sp.size() - 1 - i].n1_over_s2, 1e-9);
}

TEST(Spectrum, AsymmetricDipAtWorkingPoint) {
  std::vector<double> grid;
  for (int i = -400; i <= 400; ++i) grid.push_back(0.005 * i);
  const auto sp = ld::excitation_spectrum(kWorkingPoint, 0.1, grid, 1.0);
  std::size_t imin = 0;
  for (std::size_t i = 0; i < sp.size(); ++i)
    if (sp[i].n1_over_s2 < sp[imin].n1_over_s2) imin = i;
  const double jg12 = kWorkingPoint.real() * 2.0 * kWorkingPoint.imag();
  EXPECT_LT(sp[imin].delta * jg12, 0.0);
  EXPECT_LT(sp[400].n1_over_s2, 1.0);
  EXPECT_NEAR(sp[400].n1_over_s2, 0.374, 0.002);
  EXPECT_GT(sp[400].xi_over_s2, 0.0);
  EXPECT_GT(std::abs(sp[500].n1_over_s2 - sp[300].n1_over_s2), 1e-3);
}
