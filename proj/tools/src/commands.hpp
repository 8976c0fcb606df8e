#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lenscoupled/numerics.hpp"
#include "lenscoupled/trap.hpp"

namespace lenscoupled::cli {

struct PsfParams {
  std::vector<double> r_i{0.0, 0.0, 0.0};
  std::vector<double> r_j{0.0, 0.0, 0.0};
  double theta_max = std::numbers::pi / 3;
  double wavelength = 852e-9;  // m, used without --lambda-units
  bool lambda_units = true;
  std::string out;
};

struct SweepParams {
  std::string orientation = "x";
  double theta_min = 0.01;
  double theta_max = std::numbers::pi / 2;
  int steps = 100;
  std::string out;
};

struct MapParams {
  std::string orientation = "x";
  std::string orientation2;  // empty: same as orientation
  std::string plane = "xz";
  double extent = 3.0;
  int resolution = 201;
  double theta_max = std::numbers::pi / 3;
  double wavelength = 852e-9;
  bool lambda_units = true;
  std::string out;
};

struct SpectrumParams {
  double J12 = 0.4;        // hbar Gamma
  double Gamma12 = -0.15;  // Gamma
  double position = std::numeric_limits<double>::quiet_NaN();  // on-axis z, wavelengths
  std::string orientation = "x";
  double theta_max = std::numbers::pi / 3;
  double saturation = 0.1;
  double delta_min = -3.0;  // Gamma
  double delta_max = 3.0;
  int steps = 601;
  std::string mode = "as_printed";
  std::string out;
};

struct TrapParams {
  std::string species = "Cs133-D2";
  std::optional<trap::AtomSpecies> custom_species;
  double theta_max = std::numbers::pi / 3;
  std::string orientation = "x";
  double saturation = 0.1;
  double detuning = 0.0;  // Gamma
  int n_driven = 1;
  double z_min = 0.0;     // m; z_min == z_max == 0 picks [0, 1.5] lambda_D
  double z_max = 0.0;
  int z_points = 301;
  std::vector<double> gravity_axis{0.0, 0.0, -1.0};
  std::string mode = "as_printed";
  double e0_over_Er = 1.0;
  std::string out;
  std::string summary;  // default: next to --out with a .json extension
};

void run_psf(const PsfParams& p, const numerics::QuadratureSpec& q, std::ostream& out);
void run_gamma_sweep(const SweepParams& p, const numerics::QuadratureSpec& q, std::ostream& out);
void run_coupling_map(const MapParams& p, const numerics::QuadratureSpec& q, std::ostream& out);
void run_spectrum(const SpectrumParams& p, const numerics::QuadratureSpec& q, std::ostream& out);
void run_trap(const TrapParams& p, const numerics::QuadratureSpec& q, std::ostream& out);

std::string summary_path_for(const std::string& csv_path);

}  // namespace lenscoupled::cli
