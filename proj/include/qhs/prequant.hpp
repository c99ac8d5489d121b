#pragma once

#include <optional>
#include <span>
#include <string>

#include "qhs/alcove.hpp"

namespace qhs {

/// Outcome of a pre-quantization test at a fixed level.
///
/// A positive verdict carries the weight k*xi as witness. A negative one names
/// the violated condition instead.
struct PrequantVerdict {
  bool answer = false;
  int level = 0;
  std::optional<CartanVector> witness;
  std::string violated;
};

/// Conjugacy class of exp(xi), xi in the alcove, at level k: integral iff
/// k*xi in Lambda* (k*xi in kA is automatic). Throws Error(outside_alcove) or
/// Error(invalid_level).
PrequantVerdict class_prequantizable(const RootSystem& rs, const CartanVector& xi, int k);

/// Level-k pre-quantization exists for H_2(M, Z) r-torsion whenever r divides k.
/// r = 1 encodes H_2 = 0. Throws Error(invalid_level) for r < 1 or k < 1.
bool torsion_level_admissible(int r, int k);

/// A fusion product is pre-quantizable when every factor is. The G^{2h} factor
/// contributes true at every level, so an empty list is true.
/// Throws Error(mixed_levels) if the verdicts disagree on the level.
bool fusion_prequantizable(std::span<const PrequantVerdict> verdicts);

}  // namespace qhs
