#pragma once

#include <vector>

#include "qhs/root_system.hpp"

namespace qhs {

/// Vertices mu_0 = 0, mu_1, ..., mu_d of the fundamental alcove.
struct AlcoveModel {
  LieType type;
  std::vector<CartanVector> vertices;
};

struct AlcoveMembership {
  bool contained = false;
  /// Some defining inequality holds with equality.
  bool boundary = false;
};

/// Lambda* ∩ kA, lexicographically ordered.
struct LevelWeightSet {
  LieType type;
  int level = 0;
  std::vector<CartanVector> weights;
};

AlcoveModel alcove_vertices(const RootSystem& rs);

/// (alpha_i, xi) >= 0 for every simple root and (alpha_0, xi) >= -k.
/// Throws Error(invalid_level) for k <= 0.
AlcoveMembership alcove_contains(const RootSystem& rs, const CartanVector& xi, int k);

/// (mu, alpha_i^vee) integral for every simple root.
bool weight_lattice_contains(const RootSystem& rs, const CartanVector& mu);

/// Throws Error(invalid_level) for k < 0.
LevelWeightSet level_weights(const RootSystem& rs, int k);

/// Smallest k >= 1 with k mu_j in Lambda* for every vertex.
int minimal_integral_level(const RootSystem& rs);

/// Barycentric coordinates of xi with respect to mu_0, ..., mu_d:
/// b_j = m_j (alpha_j, xi) for j >= 1 and b_0 = 1 + (alpha_0, xi), m_j the marks.
RatVec barycentric_coordinates(const RootSystem& rs, const CartanVector& xi);

/// I(xi) = { j : xi in A_j }, A_j the complement of the face opposite mu_j.
/// Throws Error(outside_alcove) unless xi lies in the level-1 alcove.
std::vector<int> open_face_set(const RootSystem& rs, const CartanVector& xi);

/// theta_ij = mu_j - mu_i. Throws Error(index_out_of_range).
CartanVector theta_weight(const RootSystem& rs, int i, int j);

}  // namespace qhs
