#pragma once

#include <numbers>

// CODATA 2018 exact / recommended values, SI.
namespace lenscoupled::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299792458.0;         // m/s
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // N/A^2
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
inline constexpr double standard_gravity = 9.80665;              // m/s^2

}  // namespace lenscoupled::constants
