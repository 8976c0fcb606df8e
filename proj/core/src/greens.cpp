#include "lenscoupled/greens.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lenscoupled/errors.hpp"

namespace lenscoupled::greens {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

struct Separation {
  double distance;
  Vec3 unit;
};

Separation separation(const Vec3& r, const Vec3& r0) {
  if (!r.finite() || !r0.finite()) throw DomainError("Green's tensor: positions must be finite");
  const Vec3 d = r - r0;
  const double dist = d.norm();
  if (!(dist > 0.0)) throw SingularityError("free-space Green's tensor is singular at R = 0");
  return {dist, d * (1.0 / dist)};
}

}  // namespace

double LensSpec::numerical_aperture() const { return std::sin(theta_max); }

void LensSpec::validate() const {
  if (!(theta_max > 0.0) || theta_max > kPi / 2 + 1e-15) {
    std::ostringstream os;
    os << "LensSpec: theta_max must lie in (0, pi/2], got " << theta_max;
    throw DomainError(os.str());
  }
  if (!(wavelength > 0.0) || !std::isfinite(wavelength))
    throw DomainError("LensSpec: wavelength must be positive");
  if (!(focal_length >= 100.0 * wavelength)) {
    std::ostringstream os;
    os << "LensSpec: focal length must be at least 100 wavelengths (f/lambda = "
       << focal_length / wavelength << ")";
    throw DomainError(os.str());
  }
}

ComplexMat3 free_space_full(const Vec3& r, const Vec3& r0, double k) {
  const auto [R, u] = separation(r, r0);
  const double kR = k * R;
  const cplx pref = std::exp(kI * kR) / (4.0 * kPi * R);
  const cplx diag = 1.0 + (kI * kR - 1.0) / (kR * kR);
  const cplx proj = (3.0 - 3.0 * kI * kR - kR * kR) / (kR * kR);
  return pref * (diag * ComplexMat3::identity() + proj * ComplexMat3::outer(u));
}

FreeSpaceParts free_space_parts(const Vec3& r, const Vec3& r0, double k) {
  const auto [R, u] = separation(r, r0);
  const double kR = k * R;
  const cplx pref = std::exp(kI * kR) / (4.0 * kPi * R);
  const ComplexMat3 id = ComplexMat3::identity();
  const ComplexMat3 uu = ComplexMat3::outer(u);
  const ComplexMat3 transverse_dipole = id - 3.0 * uu;
  FreeSpaceParts parts;
  parts.near_field = (pref / (kR * kR)) * (3.0 * uu - id);
  parts.intermediate_field = (pref * kI / kR) * transverse_dipole;
  parts.far_field = pref * (id - uu);
  return parts;
}

ComplexMat3 free_space_imag_coincident(double k) {
  return cplx(k / (6.0 * kPi), 0.0) * ComplexMat3::identity();
}

FocalCoords effective_coords(const Vec3& r_i, const Vec3& r_j) {
  const Vec3 d = r_i - r_j;
  FocalCoords fc;
  fc.rho = std::hypot(d.x, d.y);
  fc.phi = fc.rho > 0.0 ? std::atan2(d.y, d.x) : 0.0;
  fc.z = d.z;
  return fc;
}

PsfIntegrals psf_integrals(const FocalCoords& fc, double k, double theta_max,
                           const QuadratureSpec& spec) {
  if (!std::isfinite(fc.rho) || !std::isfinite(fc.z) || fc.rho < 0.0)
    throw DomainError("psf_integrals: focal coordinates must be finite with rho >= 0");
  const double kz = k * std::abs(fc.z);
  const double krho = k * fc.rho;
  const auto values = numerics::integrate_polar_n<4>(
      [&](double t) {
        const double s = std::sin(t);
        const double c = std::cos(t);
        const cplx phase = std::exp(kI * (kz * c));
        const double arg = krho * s;
        const double j0 = numerics::bessel_j(0, arg);
        const double j1 = krho > 0.0 ? numerics::bessel_j(1, arg) : 0.0;
        const double j2 = krho > 0.0 ? numerics::bessel_j(2, arg) : 0.0;
        return std::array<cplx, 4>{
            s * (1.0 + c * c) * j0 * phase,
            s * (1.0 - c * c) * j2 * phase,
            s * s * c * j1 * phase,
            s * s * s * j0 * phase,
        };
      },
      theta_max, spec, numerics::oscillation_min_nodes(k, fc.rho, fc.z));
  return {values[0], values[1], values[2], values[3]};
}

ComplexMat3 g_matrix(const PsfIntegrals& in, const FocalCoords& fc) {
  double phi = fc.phi;
  const bool reversed =
      fc.z < 0.0 || (fc.z == 0.0 && (std::cos(phi) < 0.0 || (std::cos(phi) == 0.0 && std::sin(phi) < 0.0)));
  if (reversed) phi += kPi;
  const double c1 = std::cos(phi);
  const double s1 = std::sin(phi);
  const double c2 = std::cos(2.0 * phi);
  const double s2 = std::sin(2.0 * phi);
  ComplexMat3 g;
  g(0, 0) = in.i1 + in.i2 * c2;
  g(0, 1) = in.i2 * s2;
  g(0, 2) = -2.0 * kI * in.i3 * c1;
  g(1, 0) = g(0, 1);
  g(1, 1) = in.i1 - in.i2 * c2;
  g(1, 2) = -2.0 * kI * in.i3 * s1;
  g(2, 0) = g(0, 2);
  g(2, 1) = g(1, 2);
  g(2, 2) = 2.0 * in.i4;
  return kI * g;
}

ComplexMat3 g_matrix(const FocalCoords& fc, double k, double theta_max,
                     const QuadratureSpec& spec) {
  return g_matrix(psf_integrals(fc, k, theta_max, spec), fc);
}

void check_focal_zone(const Vec3& r, double wavelength) {
  if (!r.finite() || r.norm() > kFocalGuardWavelengths * wavelength) {
    std::ostringstream os;
    os << "position (" << r.x << ", " << r.y << ", " << r.z << ") lies outside the "
       << kFocalGuardWavelengths << "-wavelength focal zone";
    throw DomainError(os.str());
  }
}

ComplexMat3 psf_green(const Vec3& r_i, const Vec3& r_j, const LensSpec& lens,
                      const QuadratureSpec& spec) {
  lens.validate();
  check_focal_zone(r_i, lens.wavelength);
  check_focal_zone(r_j, lens.wavelength);
  const double k = lens.wavenumber();
  return cplx(k / (8.0 * kPi), 0.0) * g_matrix(effective_coords(r_i, r_j), k, lens.theta_max, spec);
}

}  // namespace lenscoupled::greens
