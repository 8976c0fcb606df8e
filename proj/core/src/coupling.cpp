#include "lenscoupled/coupling.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "lenscoupled/constants.hpp"
#include "lenscoupled/errors.hpp"

namespace lenscoupled::coupling {

Vec3 axis_vector(Axis a) {
  switch (a) {
    case Axis::x: return {1.0, 0.0, 0.0};
    case Axis::y: return {0.0, 1.0, 0.0};
    case Axis::z: return {0.0, 0.0, 1.0};
  }
  return {};
}

Axis parse_axis(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  throw DomainError("orientation must be one of x, y, z (got '" + std::string(name) + "')");
}

char axis_name(Axis a) {
  switch (a) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
  }
  return '?';
}

Plane parse_plane(std::string_view name) {
  if (name == "xz") return Plane::xz;
  if (name == "xy") return Plane::xy;
  throw DomainError("plane must be xz or xy (got '" + std::string(name) + "')");
}

void DipolePair::validate() const {
  for (const Vec3* u : {&u1, &u2}) {
    if (!u->finite() || std::abs(u->norm() - 1.0) > 1e-12)
      throw DomainError("dipole orientations must be unit vectors");
  }
  if (!r1.finite() || !r2.finite()) throw DomainError("dipole positions must be finite");
}

double free_space_decay(double dipole_moment, double omega) {
  using namespace constants;
  if (!(dipole_moment > 0.0) || !(omega > 0.0))
    throw DomainError("free_space_decay: dipole moment and frequency must be positive");
  return dipole_moment * dipole_moment * omega * omega * omega /
         (3.0 * pi * hbar * vacuum_permittivity * speed_of_light * speed_of_light *
          speed_of_light);
}

CouplingResult coupling_from_g(const ComplexMat3& g, const Vec3& u1, const Vec3& u2) {
  const cplx b = g.bilinear(u1, u2);
  return {0.375 * b.real(), 0.75 * b.imag()};
}

CouplingResult coupling_coefficients(const DipolePair& pair, const LensSpec& lens,
                                     const QuadratureSpec& spec) {
  pair.validate();
  lens.validate();
  greens::check_focal_zone(pair.r1, lens.wavelength);
  greens::check_focal_zone(pair.r2, lens.wavelength);
  const auto fc = greens::effective_coords(pair.r2, pair.r1);
  const auto g = greens::g_matrix(fc, lens.wavenumber(), lens.theta_max, spec);
  return coupling_from_g(g, pair.u1, pair.u2);
}

std::vector<SweepPoint> gamma_max_sweep(Axis orientation, std::span<const double> theta_grid,
                                        const QuadratureSpec& spec) {
  const Vec3 u = axis_vector(orientation);
  std::vector<SweepPoint> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    const auto g = greens::g_matrix(greens::FocalCoords{}, 2.0 * constants::pi, theta, spec);
    out.push_back({theta, coupling_from_g(g, u, u).Gamma12_over_Gamma});
  }
  return out;
}

CouplingMap coupling_map(Axis orientation1, Axis orientation2, Plane plane, const MapGrid& grid,
                         const LensSpec& lens, const QuadratureSpec& spec) {
  lens.validate();
  if (grid.resolution < 2) throw DomainError("coupling_map: resolution must be at least 2");
  if (!(grid.extent > 0.0) || grid.extent * std::sqrt(2.0) > greens::kFocalGuardWavelengths) {
    std::ostringstream os;
    os << "coupling_map: extent must be positive and keep the grid inside the "
       << greens::kFocalGuardWavelengths << "-wavelength focal zone";
    throw DomainError(os.str());
  }
  const auto n = static_cast<std::size_t>(grid.resolution);
  CouplingMap map;
  map.plane = plane;
  map.resolution = grid.resolution;
  map.axis.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    map.axis[i] = -grid.extent + 2.0 * grid.extent * static_cast<double>(i) / static_cast<double>(n - 1);
  map.J_over_hGamma.resize(n * n);
  map.Gamma12_over_Gamma.resize(n * n);

  const Vec3 u1 = axis_vector(orientation1);
  const Vec3 u2 = axis_vector(orientation2);
  const double k = lens.wavenumber();
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      const double a = map.axis[col] * lens.wavelength;
      const double b = map.axis[row] * lens.wavelength;
      const Vec3 r2 = plane == Plane::xz ? Vec3{a, 0.0, b} : Vec3{a, b, 0.0};
      const auto g = greens::g_matrix(greens::effective_coords(r2, Vec3{}), k, lens.theta_max, spec);
      const auto c = coupling_from_g(g, u1, u2);
      map.J_over_hGamma[row * n + col] = c.J_over_hGamma;
      map.Gamma12_over_Gamma[row * n + col] = c.Gamma12_over_Gamma;
    }
  }
  return map;
}

std::vector<CouplingResult> on_axis_profile(Axis orientation1, Axis orientation2,
                                            std::span<const double> z_over_lambda,
                                            const LensSpec& lens, const QuadratureSpec& spec) {
  std::vector<CouplingResult> out;
  out.reserve(z_over_lambda.size());
  DipolePair pair;
  pair.u1 = axis_vector(orientation1);
  pair.u2 = axis_vector(orientation2);
  for (double z : z_over_lambda) {
    pair.r2 = {0.0, 0.0, z * lens.wavelength};
    out.push_back(coupling_coefficients(pair, lens, spec));
  }
  return out;
}

}  // namespace lenscoupled::coupling
