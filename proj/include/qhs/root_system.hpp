#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "qhs/rational.hpp"

namespace qhs {

/// Cartan type of a compact simple simply connected group, e.g. A_3 or E_8.
struct LieType {
  char series = 'A';
  int rank = 1;

  /// Parses "A3", "E8", "g2" and the like. Throws Error(parse_error).
  static LieType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws Error(invalid_rank) unless the rank is valid for the series.
void validate(const LieType& type);

/// Root data of one simple type, in the simple-root basis (Bourbaki numbering).
///
/// The Gram matrix is the basic inner product: long roots have squared length 2.
/// All members are exact; the object is immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// A(i, j) = <alpha_i^vee, alpha_j>.
  const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }
  const RatMat& gram() const { return gram_; }

  /// Ordered by height, then lexicographically.
  const std::vector<CartanVector>& positive_roots() const { return positive_roots_; }
  const CartanVector& highest_root() const { return highest_root_; }
  const CartanVector& lowest_root() const { return lowest_root_; }

  /// omega_i with (omega_i, alpha_j^vee) = delta_ij.
  const std::vector<CartanVector>& fundamental_weights() const { return fundamental_weights_; }

  /// Coefficients of the highest root in simple roots.
  const std::vector<int>& marks() const { return marks_; }
  int dual_coxeter() const { return dual_coxeter_; }

  /// (alpha_i, alpha_i) / 2.
  const Rational& half_norm(int i) const { return half_norms_[static_cast<std::size_t>(i)]; }

  CartanVector simple_root(int i) const;

  /// Builds the full root set (positive and negative).
  std::vector<CartanVector> all_roots() const;

 private:
  LieType type_;
  Eigen::MatrixXi cartan_;
  std::vector<Rational> half_norms_;
  RatMat gram_;
  std::vector<CartanVector> positive_roots_;
  CartanVector highest_root_;
  CartanVector lowest_root_;
  std::vector<CartanVector> fundamental_weights_;
  std::vector<int> marks_;
  int dual_coxeter_ = 0;
};

RootSystem build_root_system(const LieType& type);

/// Cartan matrix of the given type, Bourbaki numbering.
Eigen::MatrixXi cartan_matrix(const LieType& type);

/// x^T gram y. Throws Error(dimension_mismatch).
Rational inner_product(const RootSystem& rs, const CartanVector& x, const CartanVector& y);

/// (mu, alpha_i^vee) = 2 (mu, alpha_i) / (alpha_i, alpha_i).
Rational coroot_pairing(const RootSystem& rs, const CartanVector& mu, int i);

bool is_root(const RootSystem& rs, const CartanVector& v);

/// Sum of simple-root coefficients. Throws Error(not_a_root).
int height(const RootSystem& rs, const CartanVector& root);

/// s_i(v) = v - (v, alpha_i^vee) alpha_i.
CartanVector reflect(const RootSystem& rs, const CartanVector& v, int i);

/// Fundamental-weight coordinates (mu, alpha_i^vee).
RatVec weight_coordinates(const RootSystem& rs, const CartanVector& mu);

/// A-series only: simple-root coordinates to R^n with sum zero, alpha_i = e_i - e_{i+1}.
RatVec to_ambient(const RootSystem& rs, const CartanVector& v);

/// A-series only: inverse of to_ambient. Throws Error(dimension_mismatch) if the
/// length is not rank + 1 or the coordinates do not sum to zero.
CartanVector from_ambient(const RootSystem& rs, const RatVec& x);

}  // namespace qhs
