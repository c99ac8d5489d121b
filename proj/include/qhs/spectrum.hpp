#pragma once

#include <Eigen/Dense>

#include "qhs/su_n.hpp"

namespace qhs {

/// Phases within this distance of an alcove wall are snapped onto it.
inline constexpr double kSnapTol = 1e-9;

/// Accepted deviation from SU(n) for externally supplied matrices.
inline constexpr double kInputTol = 1e-10;

/// Spectrum of A in SU(n), normalized to the fundamental alcove.
struct SortedSpectrum {
  /// lambda_1 >= ... >= lambda_n >= lambda_1 - 1, sum zero.
  Eigen::VectorXd lambda;
  /// gaps(i-1) = lambda_i - lambda_{i+1} for i < n and gaps(n-1) = lambda_n - lambda_1 + 1.
  /// Nonnegative, summing to one; these are the barycentric coordinates of q(A).
  Eigen::VectorXd gaps;
  /// Column k is an eigenvector for the eigenvalue at alcove position k + 1.
  Mat eigenvectors;
};

/// Throws Error(not_special_unitary) or Error(eigensolver_failure).
SortedSpectrum sorted_spectrum(const Mat& a, double snap = kSnapTol);

/// q : SU(n) -> A as a point of R^n.
Eigen::VectorXd q_map(const Mat& a);

}  // namespace qhs
