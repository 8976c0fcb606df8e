#include "lenscoupled/trap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lenscoupled/constants.hpp"
#include "lenscoupled/errors.hpp"

namespace lenscoupled::trap {

double recoil_energy(const AtomSpecies& species, double lambda_D) {
  if (!(species.mass > 0.0) || !(lambda_D > 0.0))
    throw DomainError("recoil_energy: mass and wavelength must be positive");
  const double k = 2.0 * constants::pi / lambda_D;
  return constants::hbar * constants::hbar * k * k / (2.0 * species.mass);
}

double gamma_tot(double Gamma, double Gamma12, cplx corr, double n2) {
  if (n2 == 0.0) throw DivisionError("gamma_tot: excited population of atom 2 is zero");
  return Gamma + Gamma12 * corr.real() / n2;
}

double heating_rate(const AtomSpecies& species, double lambda_D, double Gamma_tot, double n2) {
  if (!(n2 >= 0.0 && n2 <= 1.0)) throw DomainError("heating_rate: n2 must lie in [0, 1]");
  return recoil_energy(species, lambda_D) * Gamma_tot * n2;
}

Lifetime trap_lifetime(double delta_J, const AtomSpecies& species, double lambda_D, double Gamma,
                       double Gamma_tot, cplx G12_over_Gamma) {
  if (!(delta_J > 0.0)) throw DomainError("trap_lifetime: delta_J must be positive");
  if (!(Gamma > 0.0) || !(Gamma_tot > 0.0))
    throw DomainError("trap_lifetime: Gamma and Gamma_tot must be positive");
  const double g2 = std::norm(G12_over_Gamma);
  if (g2 == 0.0) throw DivisionError("trap_lifetime: G12 is zero");
  const double Er = recoil_energy(species, lambda_D);
  const double omega_r = Er / constants::hbar;
  // |Im G| / |G|^2 with G in rad/s.
  const double phase = std::abs(G12_over_Gamma.imag()) / (g2 * Gamma);
  return {(delta_J / Er) * (Gamma / Gamma_tot) * phase, (Gamma / Gamma_tot) / omega_r};
}

void TrapRequest::validate() const {
  species.validate();
  drive.validate();
  if (n_driven < 1) throw DomainError("trap_profile: n_driven must be at least 1");
  if (z_points < 3) throw DomainError("trap_profile: need at least 3 z samples");
  if (!(z_stop > z_start) && !(z_start == 0.0 && z_stop == 0.0))
    throw DomainError("trap_profile: z range must be increasing");
  if (!gravity_axis.finite() || std::abs(gravity_axis.norm() - 1.0) > 1e-12)
    throw DomainError("trap_profile: gravity axis must be a unit vector");
  if (!(e0_over_Er >= 0.0)) throw DomainError("trap_profile: initial energy must be non-negative");
}

namespace {

// Walk uphill from i in direction step until the next sample is lower.
std::size_t climb(const std::vector<double>& u, std::size_t i, int step) {
  while (true) {
    if (step < 0 && i == 0) return i;
    if (step > 0 && i + 1 == u.size()) return i;
    const std::size_t next = step < 0 ? i - 1 : i + 1;
    if (u[next] < u[i]) return i;
    i = next;
  }
}

}  // namespace

TrapProfile trap_profile(const TrapRequest& request) {
  request.validate();
  const AtomSpecies& sp = request.species;
  const double lambda = request.lambda_D();
  const double Gamma = sp.Gamma;
  const double z0 = (request.z_start == 0.0 && request.z_stop == 0.0) ? 0.0 : request.z_start;
  const double z1 = (request.z_start == 0.0 && request.z_stop == 0.0) ? 1.5 * lambda : request.z_stop;
  if (std::max(std::abs(z0), std::abs(z1)) > greens::kFocalGuardWavelengths * lambda)
    throw DomainError("trap_profile: z range leaves the focal zone");

  const auto n = static_cast<std::size_t>(request.z_points);
  TrapProfile p;
  p.recoil = recoil_energy(sp, lambda);
  p.z.resize(n);
  std::vector<double> z_lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.z[i] = z0 + (z1 - z0) * static_cast<double>(i) / static_cast<double>(n - 1);
    z_lambda[i] = p.z[i] / lambda;
  }

  greens::LensSpec lens;
  lens.theta_max = request.theta_max;
  const auto couplings = coupling::on_axis_profile(request.orientation, request.orientation, z_lambda,
                                                   lens, request.quadrature);

  const double hG = constants::hbar * Gamma;
  const double N = static_cast<double>(request.n_driven);
  // U_g = -m g_vec . r with r on the optical axis.
  const double weight = sp.mass * constants::standard_gravity;
  std::vector<dynamics::SteadyState> states(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = couplings[i];
    const auto ss = dynamics::steady_state_analytic(c.G12_over_Gamma(), request.drive, Gamma, request.mode);
    states[i] = ss;
    p.J_over_hGamma.push_back(c.J_over_hGamma);
    p.Gamma12_over_Gamma.push_back(c.Gamma12_over_Gamma);
    p.xi.push_back(ss.xi);
    p.n2.push_back(ss.n2);
    p.U_dd.push_back(dynamics::potential_energy(N * c.J_over_hGamma * hG, ss.xi));
    p.U_g.push_back(-weight * request.gravity_axis.z * p.z[i]);
    p.U_total.push_back(p.U_dd.back() + p.U_g.back());
    const double gt = ss.n2 > 0.0 ? gamma_tot(Gamma, c.Gamma12_over_Gamma * Gamma, ss.corr, ss.n2) : Gamma;
    p.heating.push_back(heating_rate(sp, lambda, gt, ss.n2));
    for (double v : {p.U_dd.back(), p.U_total.back(), p.heating.back()}) {
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "trap_profile: non-finite value at z = " << z_lambda[i] << " lambda (J/hG = "
           << c.J_over_hGamma << ", Gamma12/G = " << c.Gamma12_over_Gamma << ")";
        throw DomainError(os.str());
      }
    }
  }

  // Local minimum of U_total nearest the guess inside the window.
  const auto& u = p.U_total;
  bool found = false;
  std::size_t best = 0;
  double best_dist = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (z_lambda[i] < 0.5 || z_lambda[i] > 1.3) continue;
    if (!(u[i] <= u[i - 1] && u[i] <= u[i + 1])) continue;
    const double dist = std::abs(z_lambda[i] - request.landmark_guess);
    if (!found || dist < best_dist) {
      found = true;
      best = i;
      best_dist = dist;
    }
  }
  if (!found) throw DomainError("trap_profile: no local minimum of the potential in [0.5, 1.3] lambda_D");

  TrapLandmarks& lm = p.landmarks;
  lm.index_min = best;
  lm.z_min = p.z[best];
  lm.U_min = u[best];
  const std::size_t left = climb(u, best, -1);
  const std::size_t right = climb(u, best, +1);
  lm.index_barrier = u[left] < u[right] ? left : right;
  lm.depth = u[lm.index_barrier] - lm.U_min;
  lm.U_dd_min = p.U_dd[best];
  lm.J_min_over_hGamma = p.J_over_hGamma[best];
  lm.J_top_over_hGamma = p.J_over_hGamma[lm.index_barrier];
  lm.G12_over_Gamma = couplings[best].G12_over_Gamma();
  const auto& ss = states[best];
  lm.Gamma_tot = gamma_tot(Gamma, couplings[best].Gamma12_over_Gamma * Gamma, ss.corr, ss.n2);
  const double delta_J =
      std::abs(lm.J_top_over_hGamma - lm.J_min_over_hGamma) * hG + request.e0_over_Er * p.recoil;
  lm.lifetime = trap_lifetime(delta_J, sp, lambda, Gamma, lm.Gamma_tot, lm.G12_over_Gamma);
  return p;
}

}  // namespace lenscoupled::trap
