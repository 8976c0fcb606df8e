#pragma once

// Electromagnetic Green's tensors: the free-space dyadic and its near /
// intermediate / far-field split, and the point-spread tensor of an
// aplanatic lens with equal focal lengths on both sides.
//
// Lengths may be in any unit as long as positions, wavelength and 1/k agree;
// the physics modules use units of the drive wavelength (k = 2 pi).

#include "lenscoupled/linalg.hpp"
#include "lenscoupled/numerics.hpp"

namespace lenscoupled::greens {

using numerics::QuadratureSpec;

/// Points farther than this many wavelengths from their focus are rejected.
inline constexpr double kFocalGuardWavelengths = 20.0;

/// Relative cylindrical coordinates between a point near one focus and a
/// point near the other, each measured from its own focal origin.
struct FocalCoords {
  double rho = 0.0;  ///< sqrt(x_ij^2 + y_ij^2) >= 0
  double phi = 0.0;  ///< atan2(y_ij, x_ij); 0 when rho == 0
  double z = 0.0;    ///< z_i - z_j, signed
};

struct PsfIntegrals {
  cplx i1;
  cplx i2;
  cplx i3;
  cplx i4;
};

struct LensSpec {
  double theta_max = std::numbers::pi / 3;  ///< collection half-angle, NA = sin(theta_max)
  double focal_length = 1e4;
  double wavelength = 1.0;

  double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }
  double numerical_aperture() const;
  /// theta_max in (0, pi/2], wavelength > 0, focal_length >= 100 wavelengths.
  void validate() const;
};

struct FreeSpaceParts {
  ComplexMat3 near_field;
  ComplexMat3 intermediate_field;
  ComplexMat3 far_field;
};

ComplexMat3 free_space_full(const Vec3& r, const Vec3& r0, double k);
FreeSpaceParts free_space_parts(const Vec3& r, const Vec3& r0, double k);

/// Exact R -> 0 limit of Im G(r, r0): (k / 6 pi) I.
ComplexMat3 free_space_imag_coincident(double k);

FocalCoords effective_coords(const Vec3& r_i, const Vec3& r_j);

PsfIntegrals psf_integrals(const FocalCoords& fc, double k, double theta_max,
                           const QuadratureSpec& spec = {});

/// Dimensionless g-matrix assembled from precomputed integrals.
///
/// The pair is evaluated in its canonical orientation (z >= 0; on the focal
/// plane phi folded into (-pi/2, pi/2]) so that exchanging the two points
/// leaves the tensor unchanged.
ComplexMat3 g_matrix(const PsfIntegrals& in, const FocalCoords& fc);
ComplexMat3 g_matrix(const FocalCoords& fc, double k, double theta_max,
                     const QuadratureSpec& spec = {});

/// (k / 8 pi) g(r_i, r_j), in 1/length.
ComplexMat3 psf_green(const Vec3& r_i, const Vec3& r_j, const LensSpec& lens,
                      const QuadratureSpec& spec = {});

/// Throws DomainError if |r| exceeds the focal-zone guard.
void check_focal_zone(const Vec3& r, double wavelength);

}  // namespace lenscoupled::greens
