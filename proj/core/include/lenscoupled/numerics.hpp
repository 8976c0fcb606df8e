#pragma once

// Special functions and oscillatory quadrature shared by the physics modules.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <sstream>

#include "lenscoupled/errors.hpp"

namespace lenscoupled::numerics {

using cplx = std::complex<double>;

struct QuadratureSpec {
  int max_refinements = 14;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;

  /// Throws DomainError unless rel_tol > 0, abs_tol > 0, max_refinements >= 1.
  void validate() const;
};

/// J_n(x) for n in {0, 1, 2}.
double bessel_j(int order, double x);

/// Minimum node count resolving the phase k*(|z| + rho) of the focal kernels.
int oscillation_min_nodes(double k, double rho, double z);

namespace detail {

inline constexpr int kPanelOrder = 16;

struct GaussRule {
  std::array<double, kPanelOrder> nodes{};    // on [-1, 1]
  std::array<double, kPanelOrder> weights{};
};

const GaussRule& gauss_legendre_rule();

[[noreturn]] void throw_nonconvergence(double a, double b, int panels, cplx previous, cplx last);

}  // namespace detail

/// Composite Gauss-Legendre over [a, b] for N complex components at once.
///
/// The panel count starts from ceil(min_nodes / 16) and doubles until two
/// successive estimates agree for every component within
/// max(rel_tol * |I|, abs_tol), or max_refinements doublings are spent.
template <std::size_t N, class Kernel>
std::array<cplx, N> integrate_interval_n(Kernel&& kernel, double a, double b,
                                         const QuadratureSpec& spec, int min_nodes = 16) {
  spec.validate();
  const auto& rule = detail::gauss_legendre_rule();
  auto estimate = [&](int panels) {
    std::array<cplx, N> sum{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * h;
      for (int q = 0; q < detail::kPanelOrder; ++q) {
        const double t = mid + 0.5 * h * rule.nodes[static_cast<std::size_t>(q)];
        const std::array<cplx, N> f = kernel(t);
        const double w = 0.5 * h * rule.weights[static_cast<std::size_t>(q)];
        for (std::size_t c = 0; c < N; ++c) sum[c] += w * f[c];
      }
    }
    return sum;
  };

  int panels = std::max(1, (std::max(min_nodes, 1) + detail::kPanelOrder - 1) / detail::kPanelOrder);
  std::array<cplx, N> previous = estimate(panels);
  for (int level = 0; level < spec.max_refinements; ++level) {
    panels *= 2;
    std::array<cplx, N> current = estimate(panels);
    bool converged = true;
    std::size_t worst = 0;
    double worst_excess = -1.0;
    for (std::size_t c = 0; c < N; ++c) {
      const double diff = std::abs(current[c] - previous[c]);
      const double tol = std::max(spec.rel_tol * std::abs(current[c]), spec.abs_tol);
      if (!(diff <= tol)) {
        converged = false;
        if (diff - tol > worst_excess) {
          worst_excess = diff - tol;
          worst = c;
        }
      }
    }
    if (converged) return current;
    if (level + 1 == spec.max_refinements)
      detail::throw_nonconvergence(a, b, panels, previous[worst], current[worst]);
    previous = current;
  }
  // max_refinements >= 1 guarantees the loop returns or throws.
  return previous;
}

/// Scalar version of integrate_interval_n.
cplx integrate_interval(const std::function<cplx(double)>& kernel, double a, double b,
                        const QuadratureSpec& spec, int min_nodes = 16);

/// Integral of kernel over the polar angle, 0 <= theta <= theta_max <= pi/2.
cplx integrate_polar(const std::function<cplx(double)>& kernel, double theta_max,
                     const QuadratureSpec& spec, int min_nodes = 16);

/// N-component integral over [0, theta_max]; same contract as integrate_polar.
template <std::size_t N, class Kernel>
std::array<cplx, N> integrate_polar_n(Kernel&& kernel, double theta_max,
                                      const QuadratureSpec& spec, int min_nodes = 16) {
  if (!(theta_max > 0.0) || theta_max > std::numbers::pi / 2 + 1e-15) {
    std::ostringstream os;
    os << "integrate_polar: theta_max must lie in (0, pi/2], got " << theta_max;
    throw DomainError(os.str());
  }
  return integrate_interval_n<N>(std::forward<Kernel>(kernel), 0.0, theta_max, spec, min_nodes);
}

/// max over the cos and sin variants of
///   | int_0^{2pi} {cos,sin}(n phi') exp(i x cos(phi' - phi)) dphi'
///     - 2 pi i^n J_n(x) {cos,sin}(n phi) |
/// evaluated with the composite Gauss-Legendre rule.
double azimuthal_identity_residual(int n, double x, double phi);

}  // namespace lenscoupled::numerics
