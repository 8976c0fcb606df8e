#include "lenscoupled/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <tuple>
#include <utility>

#include "lenscoupled/errors.hpp"

namespace lenscoupled::dynamics {

namespace {

constexpr double kSingularRel = 1e-12;

void check_gamma(double Gamma) {
  if (!(Gamma > 0.0) || !std::isfinite(Gamma)) throw DomainError("Gamma must be positive and finite");
}

void check_coupling(cplx g) {
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
    throw DomainError("G12 must be finite");
}

// <sigma_-^(1)> and <sigma_-^(2)> to first order in the drive.
std::pair<cplx, cplx> coherences(cplx G, double omega, double delta, double Gamma,
                                 AnalyticMode mode) {
  const cplx i{0.0, 1.0};
  if (mode == AnalyticMode::as_printed) {
    const cplx den = i * delta - 0.5 * Gamma - 2.0 * G * G / Gamma;
    if (std::abs(den) <= kSingularRel * (Gamma + std::abs(delta))) {
      std::ostringstream os;
      os << "steady_state_analytic: i delta - Gamma/2 - 2 G12^2/Gamma vanishes (delta=" << delta
         << ", G12=" << G << ")";
      throw SingularParameterError(os.str());
    }
    const cplx s1 = -i * omega / den;
    return {s1, 2.0 * i * G * s1 / Gamma};
  }
  const cplx d = i * delta - 0.5 * Gamma;
  const cplx den = d + G * G / d;
  if (std::abs(den) <= kSingularRel * (Gamma + std::abs(delta))) {
    std::ostringstream os;
    os << "steady_state_analytic: d + G12^2/d vanishes (delta=" << delta << ", G12=" << G << ")";
    throw SingularParameterError(os.str());
  }
  const cplx s1 = -i * omega / den;
  return {s1, -i * G * s1 / d};
}

cplx alpha_beta_corr(cplx G, double omega, double delta, double Gamma, cplx s1) {
  const cplx alpha = cplx{2.0 * (G * G).real(), 0.0} + Gamma * cplx{Gamma, -delta};
  const cplx beta = omega * G * (3.0 * s1 - std::conj(s1));
  const double g2 = std::norm(G);
  const double den = std::norm(alpha) - 4.0 * g2 * g2;
  if (std::abs(den) <= kSingularRel * std::norm(alpha)) {
    std::ostringstream os;
    os << "cross_correlation: |alpha|^2 = 4|G12|^4 (G12=" << G << ", delta=" << delta << ")";
    throw SingularParameterError(os.str());
  }
  return (alpha * beta + 2.0 * g2 * std::conj(beta)) / den;
}

}  // namespace

DriveSpec DriveSpec::from_saturation(double s, double delta) {
  DriveSpec d;
  d.delta = delta;
  d.saturation = s;
  d.validate();
  return d;
}

DriveSpec DriveSpec::from_rabi(double omega, double delta) {
  DriveSpec d;
  d.delta = delta;
  d.rabi = omega;
  d.validate();
  return d;
}

void DriveSpec::validate() const {
  if (!std::isfinite(delta)) throw DomainError("drive detuning must be finite");
  if (rabi.has_value() == saturation.has_value())
    throw DomainError("drive needs exactly one of Rabi frequency or saturation parameter");
  if (rabi && (!(*rabi >= 0.0) || !std::isfinite(*rabi)))
    throw DomainError("Rabi frequency must be finite and non-negative");
  if (saturation && !(*saturation > 0.0 && *saturation <= 0.3)) {
    std::ostringstream os;
    os << "saturation parameter must lie in (0, 0.3], got " << *saturation;
    throw DomainError(os.str());
  }
}

double DriveSpec::omega(double Gamma) const {
  validate();
  if (rabi) return *rabi;
  return omega_for_saturation(*saturation, delta, Gamma);
}

double omega_for_saturation(double s, double delta, double Gamma) {
  if (!(s > 0.0)) throw DomainError("saturation parameter must be positive");
  return s * std::sqrt(delta * delta + 0.25 * Gamma * Gamma);
}

bool is_low_saturation(double omega, double Gamma12, double Gamma) {
  return omega <= 0.1 * (Gamma - std::abs(Gamma12));
}

cplx cross_correlation(cplx G12_over_Gamma, const DriveSpec& drive, double Gamma,
                       CorrelationEstimator estimator, AnalyticMode mode) {
  check_gamma(Gamma);
  check_coupling(G12_over_Gamma);
  const cplx G = G12_over_Gamma * Gamma;
  const double omega = drive.omega(Gamma);
  const auto [s1, s2] = coherences(G, omega, drive.delta, Gamma, mode);
  if (estimator == CorrelationEstimator::factorized) return std::conj(s1) * s2;
  return alpha_beta_corr(G, omega, drive.delta, Gamma, s1);
}

SteadyState steady_state_analytic(cplx G12_over_Gamma, const DriveSpec& drive, double Gamma,
                                  AnalyticMode mode, CorrelationEstimator estimator) {
  check_gamma(Gamma);
  check_coupling(G12_over_Gamma);
  const cplx G = G12_over_Gamma * Gamma;
  const double omega = drive.omega(Gamma);
  SteadyState ss;
  std::tie(ss.sigma1, ss.sigma2) = coherences(G, omega, drive.delta, Gamma, mode);
  ss.corr = estimator == CorrelationEstimator::factorized
                ? std::conj(ss.sigma1) * ss.sigma2
                : alpha_beta_corr(G, omega, drive.delta, Gamma, ss.sigma1);
  ss.n1 = -(2.0 / Gamma) * (G * ss.corr).imag() + (2.0 * omega / Gamma) * ss.sigma1.imag();
  ss.n2 = (2.0 / Gamma) * (std::conj(G) * ss.corr).imag();
  ss.xi = 2.0 * ss.corr.real();
  return ss;
}

double potential_energy(double J12, double xi) { return -J12 * xi; }

std::vector<SpectrumPoint> excitation_spectrum(cplx G12_over_Gamma, double s,
                                               std::span<const double> delta_grid, double Gamma,
                                               AnalyticMode mode) {
  std::vector<SpectrumPoint> out;
  out.reserve(delta_grid.size());
  const double s2 = s * s;
  for (double delta : delta_grid) {
    const auto ss = steady_state_analytic(G12_over_Gamma, DriveSpec::from_saturation(s, delta),
                                          Gamma, mode);
    out.push_back({delta, ss.n1 / s2, ss.xi / s2});
  }
  return out;
}

}  // namespace lenscoupled::dynamics
