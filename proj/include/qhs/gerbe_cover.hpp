#pragma once

#include <complex>
#include <vector>

#include "qhs/rational.hpp"
#include "qhs/su_n.hpp"

namespace qhs {

/// {i in 1..n : the alcove gap after position i is strict}; i = n is the cyclic
/// gap lambda_n > lambda_1 - 1. Index i corresponds to the alcove vertex mu_i, mu_n = mu_0 = 0.
std::vector<int> cover_index_set(const Mat& a);

/// nu_i = e_i - (1/n)(1, ..., 1) in R^n. Throws Error(index_out_of_range) unless 1 <= i <= n.
RatVec nu_weight(int n, int i);

/// mu_i = nu_1 + ... + nu_i agrees with the alcove vertices of A_{n-1} in R^n for all i.
bool mu_consistency(int n);

/// Fiber of the determinant line of a spectral subspace.
struct DetLine {
  /// Orthonormal columns.
  Mat basis;
  /// Maximal minors of basis in lexicographic row order: the top wedge in coordinates.
  Eigen::VectorXcd representative;
};

/// Maximal minors of an n x k matrix, rows chosen in lexicographic order.
Eigen::VectorXcd wedge(const Mat& columns);

/// Spectral subspace for the alcove positions i+1..j, 0 <= i < j <= n, where
/// index 0 stands for n. Throws Error(not_in_cover) unless both gaps are strict,
/// Error(index_out_of_range) for bad indices.
DetLine spectral_det_line(const Mat& a, int i, int j);

struct CocycleResult {
  /// Coefficient of wedge(W_ij) ∧ wedge(W_jk) against the W_ik representative.
  std::complex<double> coefficient;
  /// |coefficient| > 1e-8.
  bool pass = false;
};

/// E_ij ⊗ E_jk -> E_ik at A, i < j < k. Throws as spectral_det_line.
CocycleResult cocycle_check(const Mat& a, int i, int j, int k);

}  // namespace qhs
