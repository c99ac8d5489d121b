#include "qhs/alcove.hpp"

#include <algorithm>
#include <numeric>

namespace qhs {

namespace {

void require_vertex(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) {
    throw Error(ErrorCode::index_out_of_range, "vertex index " + std::to_string(i) + " for " + rs.type().name());
  }
}

}  // namespace

AlcoveModel alcove_vertices(const RootSystem& rs) {
  const int d = rs.rank();
  AlcoveModel model{rs.type(), {}};
  model.vertices.push_back(CartanVector::Zero(d));

  // (alpha_i, mu_j) = delta_ij / m_j solves both the wall equations and (alpha_0, mu_j) = -1.
  RatMat rhs = RatMat::Zero(d, d);
  for (int j = 0; j < d; ++j) rhs(j, j) = Rational(1, rs.marks()[static_cast<std::size_t>(j)]);
  const RatMat solution = exact_solve<Rational>(rs.gram(), rhs);
  for (int j = 0; j < d; ++j) model.vertices.push_back(solution.col(j));
  return model;
}

AlcoveMembership alcove_contains(const RootSystem& rs, const CartanVector& xi, int k) {
  if (k <= 0) throw Error(ErrorCode::invalid_level, "level must be positive, got " + std::to_string(k));
  if (xi.size() != rs.rank()) throw Error(ErrorCode::dimension_mismatch, "alcove point has wrong length");
  const RatVec pairings = rs.gram() * xi;
  AlcoveMembership m{true, false};
  for (int i = 0; i < rs.rank(); ++i) {
    if (pairings(i) < Rational(0)) m.contained = false;
    if (pairings(i) == Rational(0)) m.boundary = true;
  }
  const Rational top = inner_product(rs, rs.lowest_root(), xi) + Rational(k);
  if (top < Rational(0)) m.contained = false;
  if (top == Rational(0)) m.boundary = true;
  if (!m.contained) m.boundary = false;
  return m;
}

bool weight_lattice_contains(const RootSystem& rs, const CartanVector& mu) {
  const RatVec w = weight_coordinates(rs, mu);
  return std::all_of(w.data(), w.data() + w.size(), [](const Rational& r) { return is_integer(r); });
}

LevelWeightSet level_weights(const RootSystem& rs, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_level, "level must be nonnegative, got " + std::to_string(k));
  const int d = rs.rank();
  LevelWeightSet set{rs.type(), k, {}};

  // Dominant weights sum_i n_i omega_i with n_i >= 0; the comarks are >= 1, so
  // (theta, mu) <= k bounds every n_i by k.
  std::vector<int> coeff(static_cast<std::size_t>(d), 0);
  while (true) {
    CartanVector mu = CartanVector::Zero(d);
    for (int i = 0; i < d; ++i) mu += Rational(coeff[static_cast<std::size_t>(i)]) * rs.fundamental_weights()[static_cast<std::size_t>(i)];
    if (inner_product(rs, rs.highest_root(), mu) <= Rational(k)) set.weights.push_back(mu);
    int pos = 0;
    while (pos < d && coeff[static_cast<std::size_t>(pos)] == k) coeff[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) break;
    ++coeff[static_cast<std::size_t>(pos)];
  }
  std::sort(set.weights.begin(), set.weights.end(), lex_less);
  return set;
}

int minimal_integral_level(const RootSystem& rs) {
  std::int64_t level = 1;
  for (const auto& mu : alcove_vertices(rs).vertices) level = std::lcm(level, lcm_of_denominators(weight_coordinates(rs, mu)));
  return static_cast<int>(level);
}

RatVec barycentric_coordinates(const RootSystem& rs, const CartanVector& xi) {
  const int d = rs.rank();
  if (xi.size() != d) throw Error(ErrorCode::dimension_mismatch, "alcove point has wrong length");
  const RatVec pairings = rs.gram() * xi;
  RatVec b(d + 1);
  b(0) = Rational(1) + inner_product(rs, rs.lowest_root(), xi);
  for (int j = 0; j < d; ++j) b(j + 1) = Rational(rs.marks()[static_cast<std::size_t>(j)]) * pairings(j);
  return b;
}

std::vector<int> open_face_set(const RootSystem& rs, const CartanVector& xi) {
  if (!alcove_contains(rs, xi, 1).contained) {
    throw Error(ErrorCode::outside_alcove, to_string(xi) + " is not in the fundamental alcove of " + rs.type().name());
  }
  const RatVec b = barycentric_coordinates(rs, xi);
  std::vector<int> faces;
  for (int j = 0; j <= rs.rank(); ++j)
    if (b(j) > Rational(0)) faces.push_back(j);
  return faces;
}

CartanVector theta_weight(const RootSystem& rs, int i, int j) {
  require_vertex(rs, i);
  require_vertex(rs, j);
  const auto vertices = alcove_vertices(rs).vertices;
  return vertices[static_cast<std::size_t>(j)] - vertices[static_cast<std::size_t>(i)];
}

}  // namespace qhs
