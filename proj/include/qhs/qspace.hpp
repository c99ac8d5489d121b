#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qhs/rational.hpp"
#include "qhs/su_n.hpp"

namespace qhs {

/// How a matrix factor of a point moves. A tangent vector at a factor g is
/// stored as a generator x in su(n):
///   group: V = x g,          flow exp(tx) g
///   orbit: V = x g - g x,    flow exp(tx) g exp(-tx)
/// For both, the vector fields X_x with constant x satisfy [X_x, X_y] = -X_[x,y].
enum class FactorKind { group, orbit };

/// A point is a list of SU(n) matrices, one per factor.
using Point = MatList;
/// A tangent vector is a list of generators, one per factor.
using Tangent = MatList;

/// A quasi-Hamiltonian SU(n)^p-space sampled through its points.
///
/// Conventions: B(X, Y) = -tr(XY)/(4 pi^2); generating vector fields are
/// xi_M(m) = d/dt exp(-t xi).m; 2-form pairings of g-valued 1-forms are
/// B(a, b)(V, W) = B(a(V), b(W)) - B(a(W), b(V)). With these, the axioms read
/// d omega = Psi^* eta and iota(xi_M) omega = 1/2 B(Psi^*(theta^L + theta^R), xi).
class QSpace {
 public:
  virtual ~QSpace() = default;

  int n() const { return n_; }
  const std::vector<FactorKind>& factor_kinds() const { return kinds_; }
  int factor_count() const { return static_cast<int>(kinds_.size()); }
  /// p, where the moment map takes values in SU(n)^p and SU(n)^p acts.
  int moment_count() const { return moments_; }

  virtual std::string name() const = 0;
  /// Manifold dimension.
  virtual int dim() const = 0;
  virtual Point sample(std::mt19937_64& rng) const = 0;
  virtual Point act(const MatList& g, const Point& m) const = 0;
  /// Push-forward of a tangent vector under the action of g.
  virtual Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const = 0;
  virtual MatList moment(const Point& m) const = 0;
  /// dPsi_m(V) as tangent matrices at Psi(m), exact.
  virtual MatList moment_differential(const Point& m, const Tangent& v) const = 0;
  virtual double omega(const Point& m, const Tangent& v, const Tangent& w) const = 0;
  virtual Tangent generating_field(const MatList& xi, const Point& m) const = 0;

  /// Tangent matrices V_k represented by the generators of v.
  MatList tangent_matrices(const Point& m, const Tangent& v) const;
  /// Flow of the vector field with constant generators v for time t.
  Point flow(const Point& m, const Tangent& v, double t) const;
  /// Generators whose tangent matrices form a real-orthonormal basis of T_m M.
  /// If condition is given it receives the spread of retained singular values.
  std::vector<Tangent> tangent_basis(const Point& m, double* condition = nullptr) const;

 protected:
  QSpace(int n, std::vector<FactorKind> kinds, int moments);

  void require_point(const Point& m) const;
  void require_group(const MatList& g) const;

 private:
  int n_;
  std::vector<FactorKind> kinds_;
  int moments_;
};

using QSpacePtr = std::shared_ptr<const QSpace>;

/// Conjugacy class of exp(2 pi i diag(lambda)), lambda in the alcove (R^n coordinates).
/// omega_g(xi_C, zeta_C) = 1/2 B((Ad_{g^-1} - Ad_g) xi, zeta).
class ConjugacyClass final : public QSpace {
 public:
  /// Throws Error(outside_alcove) or Error(dimension_mismatch).
  ConjugacyClass(int n, const RatVec& lambda);

  const RatVec& lambda() const { return lambda_; }
  const Mat& base_point() const { return base_; }

  std::string name() const override;
  int dim() const override;
  Point sample(std::mt19937_64& rng) const override;
  Point act(const MatList& g, const Point& m) const override;
  Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const override;
  MatList moment(const Point& m) const override;
  MatList moment_differential(const Point& m, const Tangent& v) const override;
  double omega(const Point& m, const Tangent& v, const Tangent& w) const override;
  Tangent generating_field(const MatList& xi, const Point& m) const override;

 private:
  RatVec lambda_;
  Mat base_;
};

/// The double D(G) = G x G with (g1, g2).(a, b) = (g1 a g2^-1, g2 b g1^-1) and
/// Psi(a, b) = (ab, a^-1 b^-1).
class DoubleSpace final : public QSpace {
 public:
  explicit DoubleSpace(int n);

  std::string name() const override;
  int dim() const override;
  Point sample(std::mt19937_64& rng) const override;
  Point act(const MatList& g, const Point& m) const override;
  Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const override;
  MatList moment(const Point& m) const override;
  MatList moment_differential(const Point& m, const Tangent& v) const override;
  double omega(const Point& m, const Tangent& v, const Tangent& w) const override;
  Tangent generating_field(const MatList& xi, const Point& m) const override;
};

/// Direct product; moments and acting groups are concatenated, omega adds.
class ProductSpace final : public QSpace {
 public:
  ProductSpace(QSpacePtr first, QSpacePtr second);

  std::string name() const override;
  int dim() const override;
  Point sample(std::mt19937_64& rng) const override;
  Point act(const MatList& g, const Point& m) const override;
  Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const override;
  MatList moment(const Point& m) const override;
  MatList moment_differential(const Point& m, const Tangent& v) const override;
  double omega(const Point& m, const Tangent& v, const Tangent& w) const override;
  Tangent generating_field(const MatList& xi, const Point& m) const override;

 private:
  std::pair<MatList, MatList> split_factors(const MatList& v) const;
  std::pair<MatList, MatList> split_moments(const MatList& g) const;

  QSpacePtr first_;
  QSpacePtr second_;
};

/// Fuses the first two moment factors: Psi~ = (Psi_0 Psi_1, Psi_2, ...), the first
/// group acts diagonally on both slots and omega~ = omega - 1/2 B(Psi_0^* theta^L, Psi_1^* theta^R).
class InternalFusion final : public QSpace {
 public:
  /// Throws Error(group_size_mismatch) if the space has fewer than two moment factors.
  explicit InternalFusion(QSpacePtr inner, std::string label = {});

  std::string name() const override;
  int dim() const override;
  Point sample(std::mt19937_64& rng) const override;
  Point act(const MatList& g, const Point& m) const override;
  Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const override;
  MatList moment(const Point& m) const override;
  MatList moment_differential(const Point& m, const Tangent& v) const override;
  double omega(const Point& m, const Tangent& v, const Tangent& w) const override;
  Tangent generating_field(const MatList& xi, const Point& m) const override;

 private:
  MatList expand(const MatList& g) const;

  QSpacePtr inner_;
  std::string label_;
};

QSpacePtr make_conjugacy_class(int n, const RatVec& lambda);
QSpacePtr make_double(int n);
/// Internal fusion of the double: Psi(a, b) = [a, b] with the conjugation action.
QSpacePtr make_fused_double(int n);
/// h fused doubles fused together: Psi = prod_j [a_j, b_j]. Throws Error(invalid_level) for h < 1.
QSpacePtr make_genus(int n, int h);
/// M1 ⊛ M2. Throws Error(group_size_mismatch) unless both are SU(n)-valued for the same n.
QSpacePtr make_fusion(QSpacePtr first, QSpacePtr second);
QSpacePtr make_internal_fusion(QSpacePtr space);
QSpacePtr make_product(QSpacePtr first, QSpacePtr second);

/// Builds a space from a descriptor: "class" (needs lambda), "double",
/// "fused_double" or "genus:h". Throws Error(parse_error) on unknown descriptors.
QSpacePtr make_space(std::string_view descriptor, int n, const RatVec* lambda = nullptr);

}  // namespace qhs
