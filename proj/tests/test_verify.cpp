#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhs/verify.hpp"

using namespace qhs;

namespace {

RatVec ambient(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (auto x : xs) v(k++) = x;
  return v;
}

/// Forwards to another space with omega multiplied by a constant.
class ScaledOmega final : public QSpace {
 public:
  ScaledOmega(QSpacePtr inner, double factor)
      : QSpace(inner->n(), inner->factor_kinds(), inner->moment_count()), inner_(std::move(inner)), factor_(factor) {}

  std::string name() const override { return "scaled(" + inner_->name() + ")"; }
  int dim() const override { return inner_->dim(); }
  Point sample(std::mt19937_64& rng) const override { return inner_->sample(rng); }
  Point act(const MatList& g, const Point& m) const override { return inner_->act(g, m); }
  Tangent act_tangent(const MatList& g, const Point& m, const Tangent& v) const override { return inner_->act_tangent(g, m, v); }
  MatList moment(const Point& m) const override { return inner_->moment(m); }
  MatList moment_differential(const Point& m, const Tangent& v) const override { return inner_->moment_differential(m, v); }
  double omega(const Point& m, const Tangent& v, const Tangent& w) const override { return factor_ * inner_->omega(m, v, w); }
  Tangent generating_field(const MatList& xi, const Point& m) const override { return inner_->generating_field(xi, m); }

 private:
  QSpacePtr inner_;
  double factor_;
};

std::vector<QSpacePtr> axiom_spaces() {
  return {make_conjugacy_class(2, ambient({Rational(1, 8), Rational(-1, 8)})),
          make_conjugacy_class(3, ambient({Rational(1, 4), Rational(1, 12), Rational(-1, 3)})),
          make_double(2), make_fused_double(2), make_genus(2, 2)};
}

}  // namespace

TEST_CASE("axiom names") {
  for (Axiom a : {Axiom::cocycle, Axiom::moment, Axiom::min_degeneracy, Axiom::equivariance}) CHECK(parse_axiom(to_string(a)) == a);
  try {
    parse_axiom("symplectic");
    FAIL("accepted unknown axiom");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_axiom);
  }
}

TEST_CASE("all axioms hold on the built-in spaces") {
  for (const auto& s : axiom_spaces()) {
    for (Axiom a : {Axiom::moment, Axiom::cocycle, Axiom::min_degeneracy, Axiom::equivariance}) {
      CAPTURE(s->name());
      CAPTURE(to_string(a));
      VerifyOptions o;
      o.samples = a == Axiom::moment ? 50 : 20;
      const auto r = verify_axiom(*s, a, o);
      CHECK(r.pass);
      CHECK(r.pass == (r.max_residual < r.tolerance));
      CHECK(r.tolerance == default_tolerance(a));
    }
  }
}

TEST_CASE("a wrongly scaled 2-form is caught") {
  const ScaledOmega doubled(make_double(2), 2.0);
  const auto cocycle = verify_axiom(doubled, Axiom::cocycle, {});
  CHECK_FALSE(cocycle.pass);
  CHECK(cocycle.max_residual > 1e-3);
  CHECK_FALSE(verify_axiom(doubled, Axiom::moment, {}).pass);
  const ScaledOmega flipped(make_fused_double(2), -1.0);
  CHECK_FALSE(verify_axiom(flipped, Axiom::cocycle, {}).pass);
}

TEST_CASE("quarter class: omega vanishes identically") {
  const auto s = make_conjugacy_class(2, ambient({Rational(1, 4), Rational(-1, 4)}));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Point m = s->sample(rng);
    const auto basis = s->tangent_basis(m);
    REQUIRE(basis.size() == 2);
    CHECK(std::abs(s->omega(m, basis[0], basis[1])) < 1e-14);
  }
  VerifyOptions o;
  o.samples = 30;
  const auto r = verify_axiom(*s, Axiom::min_degeneracy, o);
  CHECK(r.pass);
  CHECK(r.max_residual == 0.0);
}

TEST_CASE("exterior derivative of the class form vanishes on a 2-dimensional class") {
  const auto s = make_conjugacy_class(2, ambient({Rational(1, 8), Rational(-1, 8)}));
  std::mt19937_64 rng(2);
  const Point m = s->sample(rng);
  const auto b = s->tangent_basis(m);
  CHECK(std::abs(exterior_derivative(*s, m, b[0], b[1], b[0], 1e-4)) < 1e-8);
}

TEST_CASE("reports are reproducible and seed dependent") {
  const auto s = make_fused_double(2);
  VerifyOptions o;
  o.seed = 42;
  const auto a = verify_axiom(*s, Axiom::cocycle, o), b = verify_axiom(*s, Axiom::cocycle, o);
  CHECK(a.max_residual == b.max_residual);
  o.seed = 43;
  CHECK(verify_axiom(*s, Axiom::cocycle, o).max_residual != a.max_residual);
}

TEST_CASE("option validation") {
  const auto s = make_double(2);
  VerifyOptions o;
  o.fd_step = 1e-7;
  CHECK_THROWS_AS(verify_axiom(*s, Axiom::cocycle, o), Error);
  o.fd_step = 0.05;
  CHECK_THROWS_AS(verify_axiom(*s, Axiom::cocycle, o), Error);
  o = {};
  o.samples = 0;
  CHECK_THROWS_AS(verify_axiom(*s, Axiom::moment, o), Error);
}

TEST_CASE("reduction rank") {
  std::mt19937_64 rng(3);
  const auto g2 = make_genus(2, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat a = random_special_unitary(2, rng), b = random_special_unitary(2, rng);
    CHECK(reduction_rank_check(*g2, {a, b, b, a}) == 3);
  }
  const auto g1 = make_genus(2, 1);
  Eigen::VectorXd l1(2), l2(2);
  l1 << 0.1, -0.1;
  l2 << 0.35, -0.35;
  const Mat h = random_special_unitary(2, rng);
  CHECK(reduction_rank_check(*g1, {h * torus_element(l1) * h.adjoint(), h * torus_element(l2) * h.adjoint()}) == 2);
  CHECK(reduction_rank_check(*g1, {Mat::Identity(2, 2), Mat::Identity(2, 2)}) == 0);
  try {
    reduction_rank_check(*g1, {random_special_unitary(2, rng), random_special_unitary(2, rng)});
    FAIL("accepted a point off the level set");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_in_level_set);
  }
  CHECK_THROWS_AS(reduction_rank_check(*make_double(2), {Mat::Identity(2, 2), Mat::Identity(2, 2)}), Error);
}
