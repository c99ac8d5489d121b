#include "qhs/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qhs {

namespace {

double midpoint(int i, int steps) { return (i + 0.5) / steps; }

}  // namespace

Mat holonomy(const PiecewiseConnection& a) {
  if (a.samples.empty()) throw Error(ErrorCode::grid_mismatch, "connection needs at least one sample");
  const double h = 1.0 / a.steps();
  const auto n = a.samples.front().rows();
  Mat u = Mat::Identity(n, n);
  for (const auto& x : a.samples) {
    if (x.rows() != n || x.cols() != n) throw Error(ErrorCode::grid_mismatch, "connection samples differ in size");
    u = u * exp_algebra(Mat(h * x));
  }
  return u;
}

PiecewiseConnection gauge_transform(const MatList& g, const PiecewiseConnection& a) {
  if (g.size() != a.samples.size() || g.empty()) {
    throw Error(ErrorCode::grid_mismatch, "gauge grid has " + std::to_string(g.size()) + " samples, connection has " +
                                              std::to_string(a.samples.size()));
  }
  const int steps = a.steps();
  const double h = 1.0 / steps;
  PiecewiseConnection out;
  out.samples.reserve(g.size());
  for (int i = 0; i < steps; ++i) {
    const Mat& next = g[static_cast<std::size_t>((i + 1) % steps)];
    const Mat& prev = g[static_cast<std::size_t>((i + steps - 1) % steps)];
    const Mat& gi = g[static_cast<std::size_t>(i)];
    const Mat right = (next - prev) / (2.0 * h) * gi.adjoint();
    out.samples.push_back(adjoint_action(gi, a.samples[static_cast<std::size_t>(i)]) - project_to_algebra(right));
  }
  return out;
}

Mat SmoothGaugeData::connection_at(double t) const {
  const double w = 2.0 * std::numbers::pi * t;
  return x0 + std::cos(w) * x1 + std::sin(w) * y1;
}

Mat SmoothGaugeData::gauge_at(double t) const {
  const double w = 2.0 * std::numbers::pi * t;
  return exp_algebra(Mat(std::cos(w) * p + std::sin(w) * q));
}

PiecewiseConnection SmoothGaugeData::connection(int steps) const {
  PiecewiseConnection a;
  for (int i = 0; i < steps; ++i) a.samples.push_back(connection_at(midpoint(i, steps)));
  return a;
}

MatList SmoothGaugeData::gauge(int steps) const {
  MatList g;
  for (int i = 0; i < steps; ++i) g.push_back(gauge_at(midpoint(i, steps)));
  return g;
}

SmoothGaugeData random_gauge_data(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SmoothGaugeData d;
  d.x0 = random_algebra(n, rng, 0.5);
  d.x1 = random_algebra(n, rng, 0.5);
  d.y1 = random_algebra(n, rng, 0.5);
  d.p = random_algebra(n, rng, 0.3);
  d.q = random_algebra(n, rng, 0.3);
  return d;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

ConvergenceStudy holonomy_convergence(const SmoothGaugeData& data, const std::vector<int>& steps) {
  ConvergenceStudy study;
  study.steps = steps;
  const Mat g0 = data.gauge_at(0.0);
  std::vector<double> xs;
  for (int n : steps) {
    const PiecewiseConnection a = data.connection(n);
    const Mat lhs = holonomy(gauge_transform(data.gauge(n), a));
    const Mat rhs = adjoint_action(g0, holonomy(a));
    study.residuals.push_back(max_abs(lhs - rhs));
    xs.push_back(static_cast<double>(n));
  }
  study.order = -log_log_slope(xs, study.residuals);
  return study;
}

}  // namespace qhs
