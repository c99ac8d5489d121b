#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qhs/su_n.hpp"

namespace qhs {

/// Connection a(t) dt on S^1 = [0, 1), sampled at the midpoints t_i = (i + 1/2)/N.
struct PiecewiseConnection {
  MatList samples;

  int steps() const { return static_cast<int>(samples.size()); }
};

/// exp(h a_1) exp(h a_2) ... exp(h a_N), h = 1/N: the solution of U' = U a
/// from U(0) = e evaluated at 1. A constant connection xi dt gives exp(xi).
/// With this ordering Hol(g.A) = g(0) Hol(A) g(0)^-1. Throws Error(grid_mismatch) for N = 0.
Mat holonomy(const PiecewiseConnection& a);

/// (g.A)_i = Ad_{g_i} a_i - (dg g^-1)_i, the derivative by periodic central differences.
/// Throws Error(grid_mismatch) if the grids differ in length.
PiecewiseConnection gauge_transform(const MatList& g, const PiecewiseConnection& a);

/// Smooth periodic test data: a(t) = X0 + X1 cos 2 pi t + Y1 sin 2 pi t and
/// g(t) = exp(P cos 2 pi t + Q sin 2 pi t).
struct SmoothGaugeData {
  Mat x0, x1, y1, p, q;

  Mat connection_at(double t) const;
  Mat gauge_at(double t) const;
  PiecewiseConnection connection(int steps) const;
  MatList gauge(int steps) const;
};

SmoothGaugeData random_gauge_data(int n, std::uint64_t seed);

struct ConvergenceStudy {
  std::vector<int> steps;
  /// ‖Hol(g.A) - g(0) Hol(A) g(0)^-1‖_inf per grid size.
  std::vector<double> residuals;
  /// Negated least-squares slope of log residual against log N.
  double order = 0.0;
};

ConvergenceStudy holonomy_convergence(const SmoothGaugeData& data, const std::vector<int>& steps = {8, 16, 32, 64, 128});

/// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qhs
