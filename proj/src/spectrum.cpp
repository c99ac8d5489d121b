#include "qhs/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace qhs {

SortedSpectrum sorted_spectrum(const Mat& a, double snap) {
  if (!is_special_unitary(a, kInputTol)) throw Error(ErrorCode::not_special_unitary, "q_map expects a special unitary matrix");
  const auto n = a.rows();
  Eigen::ComplexEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::eigensolver_failure, "complex eigensolver did not converge");

  Eigen::VectorXd phase(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double p = std::arg(es.eigenvalues()(k)) / (2.0 * std::numbers::pi);
    if (p < 0.0) p += 1.0;
    if (p >= 1.0) p -= 1.0;
    phase(k) = p;
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return phase(i) > phase(j); });

  // Phases in [0, 1) sum to an integer s; lowering the s largest by one gives sum zero
  // and the alcove ordering.
  const auto s = std::clamp<Eigen::Index>(std::llround(phase.sum()), 0, n - 1);
  SortedSpectrum out;
  out.lambda.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index pos = 0; pos < n; ++pos) {
    const bool lowered = pos >= n - s;
    const Eigen::Index src = lowered ? order[static_cast<std::size_t>(pos - (n - s))] : order[static_cast<std::size_t>(pos + s)];
    out.lambda(pos) = phase(src) - (lowered ? 1.0 : 0.0);
    out.eigenvectors.col(pos) = es.eigenvectors().col(src);
  }

  out.gaps.resize(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) out.gaps(i) = out.lambda(i) - out.lambda(i + 1);
  out.gaps(n - 1) = out.lambda(n - 1) - out.lambda(0) + 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (out.gaps(i) < snap) out.gaps(i) = 0.0;
  Eigen::Index widest = 0;
  out.gaps.maxCoeff(&widest);
  out.gaps(widest) += 1.0 - out.gaps.sum();

  // Rebuild lambda from the snapped gaps.
  Eigen::VectorXd drop(n);
  drop(0) = 0.0;
  for (Eigen::Index k = 1; k < n; ++k) drop(k) = drop(k - 1) + out.gaps(k - 1);
  const double first = drop.sum() / static_cast<double>(n);
  out.lambda = Eigen::VectorXd::Constant(n, first) - drop;
  return out;
}

Eigen::VectorXd q_map(const Mat& a) { return sorted_spectrum(a).lambda; }

}  // namespace qhs
