#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lenscoupled/errors.hpp"
#include "lenscoupled/greens.hpp"

namespace lg = lenscoupled::greens;
using lenscoupled::ComplexMat3;
using lenscoupled::cplx;
using lenscoupled::Vec3;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double max_diff(const ComplexMat3& a, const ComplexMat3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 9; ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

void expect_close(cplx got, cplx want, double tol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

Vec3 random_point(std::mt19937_64& rng, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  return {u(rng), u(rng), u(rng)};
}

ComplexMat3 rotation_z(double a) {
  ComplexMat3 r;
  r(0, 0) = std::cos(a);
  r(0, 1) = -std::sin(a);
  r(1, 0) = std::sin(a);
  r(1, 1) = std::cos(a);
  r(2, 2) = 1.0;
  return r;
}

}  // namespace

TEST(FreeSpace, ReferenceValuesOnAxis) {
  const auto g = lg::free_space_full({0.0, 0.0, kTwoPi}, {}, 1.0);
  expect_close(g(2, 2), {0.00064162389091777095, -0.0040314418041499361}, 1e-15);
  expect_close(g(0, 0), {0.012344336009833336, 0.0020157209020749681}, 1e-15);
  expect_close(g(1, 1), g(0, 0), 1e-18);
  EXPECT_EQ(std::abs(g(0, 2)), 0.0);
}

TEST(FreeSpace, FieldSplitSumsToFull) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Vec3 r = random_point(rng, 3.0);
    const Vec3 r0 = random_point(rng, 3.0);
    const double k = 0.5 + 3.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto full = lg::free_space_full(r, r0, k);
    const auto p = lg::free_space_parts(r, r0, k);
    const auto sum = p.near_field + p.intermediate_field + p.far_field;
    EXPECT_LE(max_diff(sum, full), 1e-12 * std::max(1.0, full.frobenius_norm()));
  }
}

TEST(FreeSpace, Reciprocal) {
  const Vec3 a{0.3, -0.2, 1.1};
  const Vec3 b{-0.4, 0.5, 0.2};
  const auto gab = lg::free_space_full(a, b, 2.0);
  EXPECT_LE(max_diff(gab, lg::free_space_full(b, a, 2.0)), 1e-15);
  EXPECT_LE(max_diff(gab, gab.transpose()), 1e-15);
}

TEST(FreeSpace, SingularAtCoincidence) {
  EXPECT_THROW(lg::free_space_full({1, 2, 3}, {1, 2, 3}, 1.0), lenscoupled::SingularityError);
  EXPECT_THROW(lg::free_space_parts({}, {}, 1.0), lenscoupled::SingularityError);
}

TEST(FreeSpace, ImaginaryPartCoincidentLimit) {
  const double k = kTwoPi;
  const auto limit = lg::free_space_imag_coincident(k);
  EXPECT_DOUBLE_EQ(limit(0, 0).real(), k / (6.0 * kPi));
  for (const Vec3& dir : {Vec3{0, 0, 1}, Vec3{0.6, 0.8, 0.0}}) {
    const auto g = lg::free_space_full(dir * 1e-4, {}, k).imag();
    EXPECT_LE(max_diff(g, limit), 1e-6);
  }
}

TEST(Psf, IntegralsReferenceValues) {
  struct Case {
    double rho, z, theta;
    cplx i1, i2, i3, i4;
  };
  // Independent adaptive quadrature (scipy), lambda units.
  const Case cases[] = {
      {0.7, 1.3, kPi / 3, {-0.043066341965312, 0.218334172000404}, {0.0382483034287982, -0.0458167367631495},
       {0.0442465561893937, 0.014818828383502}, {-0.0126054006519344, 0.0506344687809846}},
      {2.2, -0.4, 1.2, {0.00597719863542123, -0.0146009690917432}, {-0.00903396665758055, -0.000454978751115537},
       {-0.00808698354150396, -0.0121670907945863}, {0.00671093864892358, -0.00377648292905515}},
      {0.0, 0.92, kPi / 3, {-0.131458099969606, -0.529816663117369}, {0.0, 0.0}, {0.0, 0.0},
       {-0.121267342259138, -0.10849494054051}},
      {5.0, 3.0, kPi / 2, {-0.0302284150549606, -0.0110724081370127}, {0.0166896142809739, 0.0052094773903048},
       {-0.00651834138561844, 0.0100137685685844}, {-0.0174507535268167, -0.00422993793228767}},
  };
  for (const auto& c : cases) {
    const auto in = lg::psf_integrals({c.rho, 0.0, c.z}, kTwoPi, c.theta);
    expect_close(in.i1, c.i1, 1e-10);
    expect_close(in.i2, c.i2, 1e-10);
    expect_close(in.i3, c.i3, 1e-10);
    expect_close(in.i4, c.i4, 1e-10);
  }
}

TEST(Psf, FocalPointClosedForm) {
  // Antiderivatives -cos - cos^3/3 and -cos + cos^3/3.
  for (double th : {kPi / 3, 0.4, kPi / 2}) {
    const double c = std::cos(th);
    const auto in = lg::psf_integrals({}, kTwoPi, th);
    EXPECT_NEAR(in.i1.real(), 4.0 / 3.0 - c - c * c * c / 3.0, 1e-13);
    EXPECT_NEAR(in.i4.real(), 2.0 / 3.0 - c + c * c * c / 3.0, 1e-13);
    EXPECT_EQ(in.i2, cplx(0.0));
    EXPECT_EQ(in.i3, cplx(0.0));
    EXPECT_NEAR(in.i1.imag(), 0.0, 1e-15);
  }
  const auto in = lg::psf_integrals({}, kTwoPi, kPi / 3);
  EXPECT_NEAR(in.i1.real(), 0.7916667, 1e-7);
  EXPECT_NEAR(in.i4.real(), 0.2083333, 1e-7);
}

TEST(Psf, SwapSymmetric) {
  std::mt19937_64 rng(2024);
  lg::LensSpec lens;
  for (int t = 0; t < 30; ++t) {
    const Vec3 a = random_point(rng, 2.0);
    const Vec3 b = random_point(rng, 2.0);
    const auto gab = lg::psf_green(a, b, lens);
    const auto gba = lg::psf_green(b, a, lens);
    EXPECT_LE(max_diff(gab, gba), 1e-9 * gab.frobenius_norm());
    EXPECT_LE(max_diff(gab, gab.transpose()), 1e-15);
  }
}

TEST(Psf, AzimuthalCovariance) {
  // Rotating the displacement about the axis rotates the tensor.
  lg::LensSpec lens;
  const Vec3 d{0.6, 0.2, 0.7};
  const auto g0 = lg::psf_green(d, {}, lens);
  for (double a : {0.5, 1.9, -2.4}) {
    const Vec3 dr{d.x * std::cos(a) - d.y * std::sin(a), d.x * std::sin(a) + d.y * std::cos(a), d.z};
    const auto R = rotation_z(a);
    const auto expected = R * g0 * R.transpose();
    EXPECT_LE(max_diff(lg::psf_green(dr, {}, lens), expected), 1e-11);
  }
}

TEST(Psf, ZeroApertureLimit) {
  lg::LensSpec lens;
  lens.theta_max = 1e-3;
  const auto g = lg::psf_green({0.3, 0.1, 0.5}, {}, lens);
  EXPECT_LE(g.frobenius_norm(), 1e-6 * lens.wavenumber());
}

TEST(Psf, PrefactorAndLengthScaling) {
  lg::LensSpec unit;
  lg::LensSpec si;
  si.wavelength = 852e-9;
  si.focal_length = 1e4 * si.wavelength;
  const Vec3 d{0.4, -0.3, 0.8};
  const auto g1 = lg::psf_green(d, {}, unit);
  const auto g2 = lg::psf_green(d * si.wavelength, {}, si);
  // G scales as 1/length.
  EXPECT_LE(max_diff(g2 * cplx(si.wavelength), g1), 1e-12 * g1.frobenius_norm());
  const auto gbar = lg::g_matrix(lg::effective_coords(d, {}), unit.wavenumber(), unit.theta_max);
  EXPECT_LE(max_diff(g1, gbar * cplx(unit.wavenumber() / (8.0 * kPi))), 1e-15);
}

TEST(Psf, EffectiveCoordinates) {
  const auto fc = lg::effective_coords({1.0, 1.0, 0.5}, {0.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(fc.rho, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(fc.phi, kPi / 4);
  EXPECT_DOUBLE_EQ(fc.z, -0.5);
  const auto axis = lg::effective_coords({0.0, 0.0, 0.3}, {});
  EXPECT_EQ(axis.rho, 0.0);
  EXPECT_EQ(axis.phi, 0.0);
}

TEST(Psf, GuardsAndValidation) {
  lg::LensSpec lens;
  EXPECT_THROW(lg::psf_green({25.0, 0.0, 0.0}, {}, lens), lenscoupled::DomainError);
  lens.theta_max = 1.7;
  EXPECT_THROW(lens.validate(), lenscoupled::DomainError);
  lens = {};
  lens.focal_length = 50.0;
  EXPECT_THROW(lens.validate(), lenscoupled::DomainError);
  lens = {};
  EXPECT_NEAR(lens.numerical_aperture(), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_THROW(lg::psf_integrals({-1.0, 0.0, 0.0}, kTwoPi, 1.0), lenscoupled::DomainError);
}
