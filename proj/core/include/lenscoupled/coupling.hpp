#pragma once

// Lens-mediated dipole-dipole coupling: dispersive J12 and dissipative
// Gamma12, normalized to the single-atom decay rate.

#include <span>
#include <string_view>
#include <vector>

#include "lenscoupled/greens.hpp"
#include "lenscoupled/linalg.hpp"

namespace lenscoupled::coupling {

using greens::LensSpec;
using numerics::QuadratureSpec;

enum class Axis { x, y, z };

Vec3 axis_vector(Axis a);
Axis parse_axis(std::string_view name);
char axis_name(Axis a);

struct DipolePair {
  Vec3 u1{1.0, 0.0, 0.0};
  Vec3 u2{1.0, 0.0, 0.0};
  Vec3 r1{};  ///< atom 1, in its focal frame
  Vec3 r2{};  ///< atom 2, in its focal frame

  /// Orientations must be unit vectors within 1e-12.
  void validate() const;
};

struct CouplingResult {
  double J_over_hGamma = 0.0;
  double Gamma12_over_Gamma = 0.0;

  /// G12 / Gamma = J12 / (hbar Gamma) + i Gamma12 / (2 Gamma).
  cplx G12_over_Gamma() const { return {J_over_hGamma, 0.5 * Gamma12_over_Gamma}; }
};

/// Single-atom decay rate |d|^2 omega^3 / (3 pi hbar eps0 c^3), SI.
double free_space_decay(double dipole_moment, double omega);

/// Coefficients from an already evaluated dimensionless g-matrix.
CouplingResult coupling_from_g(const ComplexMat3& g, const Vec3& u1, const Vec3& u2);

CouplingResult coupling_coefficients(const DipolePair& pair, const LensSpec& lens,
                                     const QuadratureSpec& spec = {});

struct SweepPoint {
  double theta_max;
  double gamma12_max_over_gamma;
};

/// Gamma12 at coincident effective coordinates for two parallel dipoles.
std::vector<SweepPoint> gamma_max_sweep(Axis orientation, std::span<const double> theta_grid,
                                        const QuadratureSpec& spec = {});

enum class Plane { xz, xy };

Plane parse_plane(std::string_view name);

struct MapGrid {
  double extent = 3.0;  ///< half-width, in wavelengths
  int resolution = 201; ///< samples per axis, >= 2
};

/// Scalar fields over a plane; atom 1 sits at its focus and atom 2 is
/// scanned. Row-major: row index runs over the second plane coordinate
/// (z or y), column index over x.
struct CouplingMap {
  Plane plane = Plane::xz;
  int resolution = 0;
  std::vector<double> axis;             ///< shared coordinate samples, wavelengths
  std::vector<double> J_over_hGamma;
  std::vector<double> Gamma12_over_Gamma;

  double first(std::size_t idx) const { return axis[idx % static_cast<std::size_t>(resolution)]; }
  double second(std::size_t idx) const { return axis[idx / static_cast<std::size_t>(resolution)]; }
};

CouplingMap coupling_map(Axis orientation1, Axis orientation2, Plane plane, const MapGrid& grid,
                         const LensSpec& lens, const QuadratureSpec& spec = {});

/// Coupling along the optical axis, atom 2 at (0, 0, z) for each z (wavelengths).
std::vector<CouplingResult> on_axis_profile(Axis orientation1, Axis orientation2,
                                            std::span<const double> z_over_lambda,
                                            const LensSpec& lens, const QuadratureSpec& spec = {});

}  // namespace lenscoupled::coupling
