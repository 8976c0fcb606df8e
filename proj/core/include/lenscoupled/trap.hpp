#pragma once

// Physical-unit trap analysis for one atom held below a driven ensemble at
// the opposite focus. SI throughout unless a name says otherwise.

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "lenscoupled/coupling.hpp"
#include "lenscoupled/dynamics.hpp"
#include "lenscoupled/linalg.hpp"

namespace lenscoupled::trap {

struct AtomSpecies {
  std::string label;
  double dipole_moment = 0.0;  // C m
  double lambda0 = 0.0;        // m
  double Gamma = 0.0;          // rad/s
  double mass = 0.0;           // kg

  /// Positive finite fields and Gamma within 5% of the free-space rate.
  void validate() const;
  double free_space_gamma() const;
};

/// Built-in presets; throws DomainError for an unknown label.
const AtomSpecies& species_preset(std::string_view label);
std::vector<std::string> preset_labels();

/// E_r = hbar^2 k_D^2 / 2m.
double recoil_energy(const AtomSpecies& species, double lambda_D);

/// Gamma + Gamma12 Re(corr) / n2.
double gamma_tot(double Gamma, double Gamma12, cplx corr, double n2);

/// E_r Gamma_tot n2, in W.
double heating_rate(const AtomSpecies& species, double lambda_D, double Gamma_tot, double n2);

struct Lifetime {
  double t_trap;  // s
  double t_bound; // (1/omega_r)(Gamma/Gamma_tot), s
};

/// t = (dJ/E_r)(Gamma/Gamma_tot)|Im G12|/|G12|^2 with G12 = G12_over_Gamma * Gamma.
Lifetime trap_lifetime(double delta_J, const AtomSpecies& species, double lambda_D, double Gamma,
                       double Gamma_tot, cplx G12_over_Gamma);

struct TrapRequest {
  AtomSpecies species;
  double theta_max = std::numbers::pi / 3;
  dynamics::DriveSpec drive = dynamics::DriveSpec::from_saturation(0.1);
  dynamics::AnalyticMode mode = dynamics::AnalyticMode::as_printed;
  coupling::Axis orientation = coupling::Axis::x;
  double z_start = 0.0;  // m, along the optical axis from the lower focus
  double z_stop = 0.0;   // m; both zero selects [0, 1.5] lambda_D
  int z_points = 301;
  int n_driven = 1;
  Vec3 gravity_axis{0.0, 0.0, -1.0};
  double e0_over_Er = 1.0;      // initial energy added to the barrier
  double landmark_guess = 0.92; // lambda_D
  numerics::QuadratureSpec quadrature{};

  double lambda_D() const { return species.lambda0; }
  void validate() const;
};

struct TrapLandmarks {
  double z_min = 0.0;            // m, grid point of the local minimum of U_total
  std::size_t index_min = 0;
  double U_min = 0.0;            // J
  double depth = 0.0;            // J, lower adjacent barrier minus U_min
  std::size_t index_barrier = 0;
  double U_dd_min = 0.0;         // J, lensing-field potential at z_min
  double J_min_over_hGamma = 0.0;
  double J_top_over_hGamma = 0.0;
  double Gamma_tot = 0.0;        // rad/s at z_min
  cplx G12_over_Gamma;           // at z_min
  Lifetime lifetime{};
};

struct TrapProfile {
  std::vector<double> z;  // m
  std::vector<double> J_over_hGamma;
  std::vector<double> Gamma12_over_Gamma;
  std::vector<double> xi;
  std::vector<double> n2;
  std::vector<double> U_dd;     // J
  std::vector<double> U_g;      // J
  std::vector<double> U_total;  // J
  std::vector<double> heating;  // W
  double recoil = 0.0;          // J
  TrapLandmarks landmarks;
};

/// Landmarks are the local minimum of U_total nearest landmark_guess inside
/// [0.5, 1.3] lambda_D; DomainError if the window holds none.
TrapProfile trap_profile(const TrapRequest& request);

}  // namespace lenscoupled::trap
