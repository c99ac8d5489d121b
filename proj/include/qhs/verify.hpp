#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qhs/qspace.hpp"

namespace qhs {

enum class Axiom { cocycle, moment, min_degeneracy, equivariance };

/// Throws Error(unknown_axiom).
Axiom parse_axiom(std::string_view name);
const char* to_string(Axiom axiom);

struct VerificationReport {
  Axiom axiom = Axiom::moment;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  /// pass == (max_residual < tolerance).
  bool pass = false;
  /// Sample points redrawn because their tangent basis was ill-conditioned.
  int resampled = 0;
};

struct VerifyOptions {
  int samples = 20;
  double fd_step = 1e-4;
  /// Defaults to default_tolerance(axiom).
  std::optional<double> tol;
  std::uint64_t seed = 0;
};

double default_tolerance(Axiom axiom);

/// Sampled residual check of one axiom. Sample i draws from its own generator
/// seeded with (seed, i), so reports do not depend on evaluation order.
/// Throws Error(invalid_level) for samples < 1 or fd_step outside (1e-6, 1e-2).
VerificationReport verify_axiom(const QSpace& space, Axiom axiom, const VerifyOptions& options = {});

/// The generator used for sample i of a run with the given seed.
std::mt19937_64 sample_rng(std::uint64_t seed, int index);

/// dω(X, Y, Z) for the fields with constant generators x, y, z.
double exterior_derivative(const QSpace& space, const Point& m, const Tangent& x, const Tangent& y, const Tangent& z,
                           double fd_step);

/// Sum over moment factors of eta_{Psi_j}(dPsi_j X, dPsi_j Y, dPsi_j Z), dPsi by central differences.
double pulled_back_eta(const QSpace& space, const Point& m, const Tangent& x, const Tangent& y, const Tangent& z,
                       double fd_step);

/// Numerical rank of dPsi at m. Throws Error(not_in_level_set) unless
/// ‖Psi(m) - e‖ < 1e-8, Error(group_size_mismatch) unless Psi is G-valued.
int reduction_rank_check(const QSpace& space, const Point& m, double fd_step = 1e-4);

}  // namespace qhs
