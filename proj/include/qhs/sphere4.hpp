#pragma once

#include <random>

#include <Eigen/Dense>

#include "qhs/su_n.hpp"

namespace qhs {

/// A point (z, t) of S^4 ⊂ C^2 x R.
struct S4Point {
  Eigen::Vector2cd z = Eigen::Vector2cd::Zero();
  double t = 1.0;
};

/// Suspension of the Hopf map. With z = r u, |u| = 1:
///   Psi(z, t) = t I + i r [[h_z, conj(h_c)], [h_c, -h_z]],  h_c = 2 conj(u_1) u_2, h_z = |u_1|^2 - |u_2|^2,
/// i.e. t I + i (2 z z^* / r - r I). SU(2) acting on z makes Psi equivariant.
/// Throws Error(off_sphere) unless |z|^2 + t^2 = 1 within 1e-10.
Mat sphere4_moment(const S4Point& p);

/// (g z, t).
S4Point sphere4_act(const Mat& g, const S4Point& p);

/// Uniform point of S^4.
S4Point sample_sphere4(std::mt19937_64& rng);

}  // namespace qhs
