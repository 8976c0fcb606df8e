#include "lenscoupled/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lenscoupled::numerics {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_refinements < 1) {
    std::ostringstream os;
    os << "QuadratureSpec: need rel_tol > 0, abs_tol > 0, max_refinements >= 1 (got rel_tol="
       << rel_tol << ", abs_tol=" << abs_tol << ", max_refinements=" << max_refinements << ")";
    throw DomainError(os.str());
  }
}

double bessel_j(int order, double x) {
  if (order < 0 || order > 2) throw DomainError("bessel_j: order must be 0, 1 or 2");
  if (!std::isfinite(x)) throw DomainError("bessel_j: argument must be finite");
  // std::cyl_bessel_j is defined for x >= 0; J_n(-x) = (-1)^n J_n(x).
  const double v = std::cyl_bessel_j(static_cast<double>(order), std::abs(x));
  return (x < 0.0 && order == 1) ? -v : v;
}

int oscillation_min_nodes(double k, double rho, double z) {
  const double phase = k * (std::abs(z) + std::abs(rho));
  return static_cast<int>(std::ceil(phase / (2.0 * std::numbers::pi))) + 16;
}

namespace detail {

namespace {

GaussRule build_rule() {
  // Newton iteration on P_n from the Chebyshev initial guesses.
  GaussRule rule;
  constexpr int n = kPanelOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule() {
  static const GaussRule rule = build_rule();
  return rule;
}

void throw_nonconvergence(double a, double b, int panels, cplx previous, cplx last) {
  std::ostringstream os;
  os.precision(12);
  os << "quadrature on [" << a << ", " << b << "] did not converge at " << panels
     << " panels: last estimates " << previous << " and " << last;
  throw ConvergenceError(os.str(), previous, last);
}

}  // namespace detail

cplx integrate_interval(const std::function<cplx(double)>& kernel, double a, double b,
                        const QuadratureSpec& spec, int min_nodes) {
  return integrate_interval_n<1>([&](double t) { return std::array<cplx, 1>{kernel(t)}; }, a, b,
                                 spec, min_nodes)[0];
}

cplx integrate_polar(const std::function<cplx(double)>& kernel, double theta_max,
                     const QuadratureSpec& spec, int min_nodes) {
  return integrate_polar_n<1>([&](double t) { return std::array<cplx, 1>{kernel(t)}; },
                              theta_max, spec, min_nodes)[0];
}

double azimuthal_identity_residual(int n, double x, double phi) {
  if (n < 0 || n > 2) throw DomainError("azimuthal_identity_residual: n must be 0, 1 or 2");
  const cplx i_unit(0.0, 1.0);
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-14;
  const int min_nodes = 32 + static_cast<int>(std::ceil(2.0 * std::abs(x)));
  const auto integrals = integrate_interval_n<2>(
      [&](double p) {
        const cplx phase = std::exp(i_unit * (x * std::cos(p - phi)));
        return std::array<cplx, 2>{std::cos(n * p) * phase, std::sin(n * p) * phase};
      },
      0.0, 2.0 * std::numbers::pi, spec, min_nodes);
  const cplx base = 2.0 * std::numbers::pi * std::pow(i_unit, n) * bessel_j(n, x);
  const double r_cos = std::abs(integrals[0] - base * std::cos(n * phi));
  const double r_sin = std::abs(integrals[1] - base * std::sin(n * phi));
  return std::max(r_cos, r_sin);
}

}  // namespace lenscoupled::numerics
