#pragma once

// Steady state of two coupled two-level atoms with atom 1 (optionally both)
// weakly driven: closed-form low-saturation solution and a Lindblad oracle.
//
// Rates (delta, Omega, Gamma, Gamma12, J12/hbar) are angular frequencies in
// any consistent unit; the coupling enters as G12/Gamma.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "lenscoupled/linalg.hpp"

namespace lenscoupled::dynamics {

/// Drive with detuning delta = omega_0 - omega_D and either a Rabi
/// frequency or a saturation parameter (exactly one).
struct DriveSpec {
  double delta = 0.0;
  std::optional<double> rabi;
  std::optional<double> saturation;

  static DriveSpec from_saturation(double s, double delta = 0.0);
  static DriveSpec from_rabi(double omega, double delta = 0.0);

  /// Throws DomainError unless exactly one of rabi / saturation is set,
  /// rabi >= 0 and s in (0, 0.3].
  void validate() const;
  double omega(double Gamma) const;
};

struct SteadyState {
  cplx sigma1;  ///< <sigma_-^(1)>
  cplx sigma2;  ///< <sigma_-^(2)>
  double n1 = 0.0;
  double n2 = 0.0;
  cplx corr;    ///< <sigma_+^(1) sigma_-^(2)>
  double xi = 0.0;
};

enum class AnalyticMode {
  as_printed,     ///< atom 2 equation without its detuning term
  full_detuning,  ///< both atoms detuned, as the Hamiltonian implies
};

enum class CorrelationEstimator { factorized, alpha_beta };

/// Omega = s sqrt(delta^2 + Gamma^2 / 4).
double omega_for_saturation(double s, double delta, double Gamma);

/// Low-saturation regime used for the closed form: Omega <= 0.1 (Gamma - |Gamma12|).
bool is_low_saturation(double omega, double Gamma12, double Gamma);

SteadyState steady_state_analytic(cplx G12_over_Gamma, const DriveSpec& drive, double Gamma,
                                  AnalyticMode mode = AnalyticMode::as_printed,
                                  CorrelationEstimator estimator = CorrelationEstimator::factorized);

cplx cross_correlation(cplx G12_over_Gamma, const DriveSpec& drive, double Gamma,
                       CorrelationEstimator estimator,
                       AnalyticMode mode = AnalyticMode::as_printed);

enum class DriveTargets { a1, both };

struct OracleSolution {
  SteadyState state;
  /// 4x4 density matrix, row-major, basis index 2*a1 + a2 with g = 0, e = 1.
  std::array<cplx, 16> rho{};
  cplx operator()(int r, int c) const { return rho[static_cast<std::size_t>(4 * r + c)]; }
};

/// Unique steady state of the two-atom master equation.
/// J12_over_hbar and Gamma12 share Gamma's unit.
OracleSolution lindblad_steady_state(double J12_over_hbar, double Gamma12, const DriveSpec& drive,
                                     double Gamma, DriveTargets targets = DriveTargets::a1);

/// <H'> = -J12 xi, in J12's unit.
double potential_energy(double J12, double xi);

struct SpectrumPoint {
  double delta;
  double n1_over_s2;
  double xi_over_s2;
};

/// Fixed-s scan; Omega is re-derived at every detuning.
std::vector<SpectrumPoint> excitation_spectrum(cplx G12_over_Gamma, double s,
                                               std::span<const double> delta_grid, double Gamma,
                                               AnalyticMode mode = AnalyticMode::as_printed);

}  // namespace lenscoupled::dynamics
