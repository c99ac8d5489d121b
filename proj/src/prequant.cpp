#include "qhs/prequant.hpp"

namespace qhs {

PrequantVerdict class_prequantizable(const RootSystem& rs, const CartanVector& xi, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_level, "level must be positive, got " + std::to_string(k));
  if (!alcove_contains(rs, xi, 1).contained) {
    throw Error(ErrorCode::outside_alcove,
                to_string(xi) + " does not parameterize a conjugacy class of " + rs.type().name());
  }
  const CartanVector weight = Rational(k) * xi;
  PrequantVerdict verdict;
  verdict.level = k;
  const RatVec coords = weight_coordinates(rs, weight);
  for (int i = 0; i < rs.rank(); ++i) {
    if (!is_integer(coords(i))) {
      verdict.violated = "(k*xi, alpha_" + std::to_string(i + 1) + "^vee) = " + to_string(coords(i)) + " is not an integer";
      return verdict;
    }
  }
  verdict.answer = true;
  verdict.witness = weight;
  return verdict;
}

bool torsion_level_admissible(int r, int k) {
  if (r < 1 || k < 1) throw Error(ErrorCode::invalid_level, "torsion exponent and level must be positive");
  return k % r == 0;
}

bool fusion_prequantizable(std::span<const PrequantVerdict> verdicts) {
  bool all = true;
  for (const auto& v : verdicts) {
    if (v.level != verdicts.front().level) throw Error(ErrorCode::mixed_levels, "fusion factors verified at different levels");
    all = all && v.answer;
  }
  return all;
}

}  // namespace qhs
