#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qhs/error.hpp"

namespace qhs {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using Mat = CMatrix<double>;
using MatList = std::vector<Mat>;

enum class Side { left, right };

/// Tolerance of the UnitaryPoint / AlgebraVector invariants.
inline constexpr double kGroupTol = 1e-12;

/// Relative tolerance for "V is tangent at g" checks on differenced inputs.
inline constexpr double kTangentTol = 1e-6;

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::RealScalar(0) : m.cwiseAbs().maxCoeff();
}

/// B(X, Y) = -tr(XY) / (4 pi^2). On the torus, X = 2 pi i diag(lambda) gives the
/// basic inner product of R^n.
template <typename DA, typename DB>
typename DA::RealScalar basic_form(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  using Real = typename DA::RealScalar;
  const Real four_pi_sq = Real(4) * std::numbers::pi_v<Real> * std::numbers::pi_v<Real>;
  return -(x.transpose().cwiseProduct(y)).sum().real() / four_pi_sq;
}

template <typename DA, typename DB>
typename DA::PlainObject bracket(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  return x * y - y * x;
}

/// Ad_g x = g x g^{-1} for unitary g.
template <typename DG, typename DX>
typename DX::PlainObject adjoint_action(const Eigen::MatrixBase<DG>& g, const Eigen::MatrixBase<DX>& x) {
  return g * x * g.adjoint();
}

template <typename Derived>
bool is_special_unitary(const Eigen::MatrixBase<Derived>& g, double tol = kGroupTol) {
  if (g.rows() != g.cols()) return false;
  const auto eye = Derived::PlainObject::Identity(g.rows(), g.cols());
  return max_abs(g.adjoint() * g - eye) < tol && std::abs(g.determinant() - 1.0) < tol;
}

template <typename Derived>
bool is_algebra_element(const Eigen::MatrixBase<Derived>& x, double tol = kGroupTol) {
  if (x.rows() != x.cols()) return false;
  return max_abs(x.adjoint() + x) < tol && std::abs(x.trace()) < tol;
}

/// Projection onto su(n): anti-Hermitian part with the trace removed.
template <typename Derived>
typename Derived::PlainObject project_to_algebra(const Eigen::MatrixBase<Derived>& x) {
  using Plain = typename Derived::PlainObject;
  Plain a = (x - x.adjoint()) / 2.0;
  const auto tr = a.trace() / static_cast<double>(a.rows());
  a -= tr * Plain::Identity(a.rows(), a.cols());
  return a;
}

/// exp of an anti-Hermitian matrix through the spectral decomposition of -i x,
/// which keeps the result unitary to machine precision.
template <typename Derived>
typename Derived::PlainObject exp_algebra(const Eigen::MatrixBase<Derived>& x) {
  using Plain = typename Derived::PlainObject;
  using Complex = typename Derived::Scalar;
  const Plain herm = Complex(0, -1) * x;
  Eigen::SelfAdjointEigenSolver<Plain> es(herm);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::eigensolver_failure, "exp_algebra");
  const auto phases = (Complex(0, 1) * es.eigenvalues().template cast<Complex>()).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// diag(exp(2 pi i lambda_k)).
template <typename Derived>
CMatrix<typename Derived::Scalar> torus_element(const Eigen::MatrixBase<Derived>& lambda) {
  using Real = typename Derived::Scalar;
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  CMatrix<Real> d = CMatrix<Real>::Zero(lambda.size(), lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) d(k, k) = std::polar(Real(1), two_pi * lambda(k));
  return d;
}

/// 2 pi i diag(lambda), the algebra element matching lambda under B.
template <typename Derived>
CMatrix<typename Derived::Scalar> torus_algebra_element(const Eigen::MatrixBase<Derived>& lambda) {
  using Real = typename Derived::Scalar;
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  CMatrix<Real> d = CMatrix<Real>::Zero(lambda.size(), lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) d(k, k) = std::complex<Real>(0, two_pi * lambda(k));
  return d;
}

/// Real basis of su(n), orthonormal for Re tr(X^* Y); n^2 - 1 elements.
template <typename Real = double>
std::vector<CMatrix<Real>> algebra_basis(int n) {
  using M = CMatrix<Real>;
  using C = std::complex<Real>;
  std::vector<M> basis;
  const Real inv_sqrt2 = Real(1) / std::sqrt(Real(2));
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      M a = M::Zero(n, n);
      a(k, l) = C(inv_sqrt2, 0);
      a(l, k) = C(-inv_sqrt2, 0);
      basis.push_back(a);
      M s = M::Zero(n, n);
      s(k, l) = C(0, inv_sqrt2);
      s(l, k) = C(0, inv_sqrt2);
      basis.push_back(s);
    }
  }
  // Diagonal part: Gram-Schmidt on i(E_kk - E_{k+1,k+1}).
  std::vector<M> diag;
  for (int k = 0; k + 1 < n; ++k) {
    M h = M::Zero(n, n);
    h(k, k) = C(0, 1);
    h(k + 1, k + 1) = C(0, -1);
    for (const auto& q : diag) h -= (q.adjoint() * h).trace().real() * q;
    h /= std::sqrt((h.adjoint() * h).trace().real());
    diag.push_back(h);
  }
  basis.insert(basis.end(), diag.begin(), diag.end());
  return basis;
}

/// Coordinates of x against algebra_basis(n).
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> algebra_coordinates(
    const Eigen::MatrixBase<Derived>& x, const std::vector<typename Derived::PlainObject>& basis) {
  Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = (basis[i].adjoint() * x).trace().real();
  return c;
}

template <typename Real, typename Derived>
CMatrix<Real> from_algebra_coordinates(const Eigen::MatrixBase<Derived>& c, const std::vector<CMatrix<Real>>& basis) {
  CMatrix<Real> x = CMatrix<Real>::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) x += c(static_cast<Eigen::Index>(i)) * basis[i];
  return x;
}

/// Gaussian element of su(n) with the given standard deviation per real coordinate.
template <typename Real = double, typename Rng>
CMatrix<Real> random_algebra(int n, Rng& rng, Real scale = Real(1)) {
  std::normal_distribution<Real> normal(Real(0), scale);
  CMatrix<Real> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = std::complex<Real>(normal(rng), normal(rng));
  return project_to_algebra(a);
}

template <typename Real = double, typename Rng>
CMatrix<Real> random_special_unitary(int n, Rng& rng) {
  return exp_algebra(random_algebra<Real>(n, rng, Real(1.5)));
}

/// Left or right Maurer-Cartan form: g^{-1} V or V g^{-1}.
/// Throws Error(not_tangent) unless the result lies in su(n).
template <typename DG, typename DV>
typename DV::PlainObject maurer_cartan(const Eigen::MatrixBase<DG>& g, const Eigen::MatrixBase<DV>& v, Side side,
                                       double tol = kTangentTol) {
  typename DV::PlainObject x = side == Side::left ? (g.adjoint() * v).eval() : (v * g.adjoint()).eval();
  const double scale = std::max(1.0, static_cast<double>(max_abs(v)));
  if (!is_algebra_element(x, tol * scale)) throw Error(ErrorCode::not_tangent, "matrix is not tangent to SU(n) at g");
  return x;
}

/// eta_g(V1, V2, V3) = 1/12 sum_sigma sgn(sigma) B(x_s1, [x_s2, x_s3]), x_i = g^{-1} V_i.
template <typename DG, typename D1, typename D2, typename D3>
double eval_eta(const Eigen::MatrixBase<DG>& g, const Eigen::MatrixBase<D1>& v1, const Eigen::MatrixBase<D2>& v2,
                const Eigen::MatrixBase<D3>& v3, double tol = kTangentTol) {
  const std::array<Mat, 3> x = {maurer_cartan(g, v1, Side::left, tol), maurer_cartan(g, v2, Side::left, tol),
                                maurer_cartan(g, v3, Side::left, tol)};
  constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
  double total = 0.0;
  for (int p = 0; p < 6; ++p) total += signs[p] * basic_form(x[perms[p][0]], bracket(x[perms[p][1]], x[perms[p][2]]));
  return total / 12.0;
}

}  // namespace qhs
