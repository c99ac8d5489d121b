#include "qhs/sphere4.hpp"

#include <cmath>

namespace qhs {

Mat sphere4_moment(const S4Point& p) {
  const double r2 = p.z.squaredNorm();
  if (std::abs(r2 + p.t * p.t - 1.0) > 1e-10) throw Error(ErrorCode::off_sphere, "point is not on the unit 4-sphere");
  const std::complex<double> i(0.0, 1.0);
  Mat psi = p.t * Mat::Identity(2, 2);
  const double r = std::sqrt(r2);
  if (r < 1e-300) return psi;
  psi += i * (2.0 * p.z * p.z.adjoint() / r - r * Mat::Identity(2, 2));
  return psi;
}

S4Point sphere4_act(const Mat& g, const S4Point& p) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorCode::group_size_mismatch, "S^4 carries an SU(2) action");
  return {g * p.z, p.t};
}

S4Point sample_sphere4(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Matrix<double, 5, 1> x;
  for (auto& c : x) c = normal(rng);
  x.normalize();
  S4Point p;
  p.z << std::complex<double>(x(0), x(1)), std::complex<double>(x(2), x(3));
  p.t = x(4);
  return p;
}

}  // namespace qhs
