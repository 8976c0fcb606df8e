#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "lenscoupled/dynamics.hpp"
#include "lenscoupled/errors.hpp"

namespace lenscoupled::dynamics {

namespace {

using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Mat16 = Eigen::Matrix<cplx, 16, 16>;

Mat16 kron(const Mat4& a, const Mat4& b) {
  Mat16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

Mat4 kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

OracleSolution lindblad_steady_state(double J12_over_hbar, double Gamma12, const DriveSpec& drive,
                                     double Gamma, DriveTargets targets) {
  if (!(Gamma > 0.0) || !std::isfinite(Gamma)) throw DomainError("Gamma must be positive and finite");
  if (!std::isfinite(J12_over_hbar) || !std::isfinite(Gamma12))
    throw DomainError("lindblad_steady_state: couplings must be finite");
  if (std::abs(Gamma12) > Gamma * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dissipator matrix not positive semidefinite: |Gamma12| = " << std::abs(Gamma12)
       << " > Gamma = " << Gamma;
    throw PhysicalityError(os.str());
  }

  // Work in units of Gamma.
  const double omega = drive.omega(Gamma) / Gamma;
  const double delta = drive.delta / Gamma;
  const double J = J12_over_hbar / Gamma;
  const double g12 = Gamma12 / Gamma;

  Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
  lower(0, 1) = 1.0;
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  const Mat4 sm1 = kron2(lower, id2);
  const Mat4 sm2 = kron2(id2, lower);
  const Mat4 sp1 = sm1.adjoint();
  const Mat4 sp2 = sm2.adjoint();

  Mat4 H = -delta * (sp1 * sm1 + sp2 * sm2) - omega * (sp1 + sm1) - J * (sp1 * sm2 + sp2 * sm1);
  if (targets == DriveTargets::both) H -= omega * (sp2 + sm2);

  const Mat4 id4 = Mat4::Identity();
  const cplx i{0.0, 1.0};
  // Column-stacked vec: vec(A X B) = (B^T kron A) vec X.
  Mat16 L = -i * (kron(id4, H) - kron(H.transpose(), id4));
  const std::array<const Mat4*, 2> ops{&sm1, &sm2};
  const double D[2][2] = {{1.0, g12}, {g12, 1.0}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Mat4& A = *ops[static_cast<std::size_t>(b)];
      const Mat4 B = ops[static_cast<std::size_t>(a)]->adjoint();
      const Mat4 BA = B * A;
      L += D[a][b] * (kron(B.transpose(), A) - 0.5 * kron(id4, BA) - 0.5 * kron(BA.transpose(), id4));
    }
  }

  Eigen::JacobiSVD<Mat16> svd(L);
  const auto& sv = svd.singularValues();
  if (!(sv(14) > 1e-10 * sv(0))) {
    std::ostringstream os;
    os << "Liouvillian null space is degenerate (second-smallest singular value " << sv(14)
       << ", largest " << sv(0) << ")";
    throw NumericalRankError(os.str());
  }

  Eigen::Matrix<cplx, 17, 16> A;
  A.topRows<16>() = L;
  A.row(16).setZero();
  for (int k = 0; k < 4; ++k) A(16, 5 * k) = 1.0;
  Eigen::Matrix<cplx, 17, 1> rhs = Eigen::Matrix<cplx, 17, 1>::Zero();
  rhs(16) = 1.0;
  const Eigen::Matrix<cplx, 16, 1> v = A.colPivHouseholderQr().solve(rhs);

  OracleSolution out;
  Mat4 rho;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) {
      rho(r, c) = v(r + 4 * c);
      out.rho[static_cast<std::size_t>(4 * r + c)] = v(r + 4 * c);
    }
  auto expect = [&](const Mat4& op) { return (rho * op).trace(); };
  SteadyState& ss = out.state;
  ss.sigma1 = expect(sm1);
  ss.sigma2 = expect(sm2);
  ss.n1 = expect(sp1 * sm1).real();
  ss.n2 = expect(sp2 * sm2).real();
  ss.corr = expect(sp1 * sm2);
  ss.xi = 2.0 * ss.corr.real();
  return out;
}

}  // namespace lenscoupled::dynamics
