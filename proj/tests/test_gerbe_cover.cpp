#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qhs/alcove.hpp"
#include "qhs/gerbe_cover.hpp"
#include "qhs/spectrum.hpp"

using namespace qhs;

namespace {

const std::complex<double> I(0.0, 1.0);

Mat diagonal(std::initializer_list<double> phases) {
  Eigen::VectorXd l(static_cast<Eigen::Index>(phases.size()));
  Eigen::Index k = 0;
  for (double p : phases) l(k++) = p;
  return torus_element(l);
}

// Projector onto the span of orthonormal columns.
Mat projector(const Mat& q) { return q * q.adjoint(); }

}  // namespace

TEST_CASE("cover index sets in SU(2)") {
  CHECK(cover_index_set(diagonal({0.25, -0.25})) == std::vector<int>{1, 2});
  CHECK(cover_index_set(Mat::Identity(2, 2)) == std::vector<int>{2});
  CHECK(cover_index_set(Mat(-Mat::Identity(2, 2))) == std::vector<int>{1});
}

TEST_CASE("cover index set matches the open face set of q(A)") {
  std::mt19937_64 rng(1);
  for (int n : {2, 3}) {
    const RootSystem rs(LieType{'A', n - 1});
    for (int trial = 0; trial < 500; ++trial) {
      // Mix generic samples with snapped ones on walls and vertices.
      Mat a;
      RatVec qr(n);
      if (trial % 3 == 0) {
        const auto vertices = alcove_vertices(rs).vertices;
        std::uniform_int_distribution<int> pick(0, n - 1);
        const RatVec v1 = to_ambient(rs, vertices[static_cast<std::size_t>(pick(rng))]);
        const RatVec v2 = to_ambient(rs, vertices[static_cast<std::size_t>(pick(rng))]);
        qr = (v1 + v2) / Rational(2);
        const Mat h = random_special_unitary(n, rng);
        a = h * torus_element(to_double(qr)) * h.adjoint();
      } else {
        // Generic samples sit far from the walls, so rounding q(A) keeps every strict inequality.
        a = random_special_unitary(n, rng);
        const Eigen::VectorXd q = q_map(a);
        for (int k = 0; k < n; ++k) qr(k) = Rational(std::llround(q(k) * 1'000'000'000'000LL), 1'000'000'000'000LL);
        qr(n - 1) = -qr.head(n - 1).sum();
      }
      const auto faces = open_face_set(rs, from_ambient(rs, qr));
      std::vector<int> expected;
      for (int j : faces) expected.push_back(j == 0 ? n : j);
      std::sort(expected.begin(), expected.end());
      CHECK(cover_index_set(a) == expected);
    }
  }
}

TEST_CASE("nu weights") {
  CHECK(nu_weight(3, 2) == (RatVec(3) << Rational(-1, 3), Rational(2, 3), Rational(-1, 3)).finished());
  for (int n = 2; n <= 6; ++n) {
    RatVec sum = RatVec::Zero(n);
    for (int i = 1; i <= n; ++i) sum += nu_weight(n, i);
    CHECK(sum.isZero());
    CHECK(mu_consistency(n));
  }
  CHECK_THROWS_AS(nu_weight(3, 0), Error);
  CHECK_THROWS_AS(nu_weight(3, 4), Error);
}

TEST_CASE("theta weights are sums of nu weights") {
  for (int n = 2; n <= 6; ++n) {
    const RootSystem rs(LieType{'A', n - 1});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        RatVec sum = RatVec::Zero(n);
        for (int k = i + 1; k <= j; ++k) sum += nu_weight(n, k);
        CHECK(to_ambient(rs, theta_weight(rs, i, j)) == sum);
      }
  }
}

TEST_CASE("det lines of a diagonal matrix") {
  const Mat a = diagonal({0.3, 0.1, -0.4});
  const DetLine line = spectral_det_line(a, 1, 3);
  CHECK(line.basis.cols() == 2);
  // Span of e_2, e_3: the only nonzero minor is rows (1, 2), unimodular.
  CHECK(max_abs(projector(line.basis) - Mat(Eigen::Vector3cd(0, 1, 1).asDiagonal())) < 1e-12);
  REQUIRE(line.representative.size() == 3);
  CHECK(std::abs(line.representative(0)) < 1e-12);
  CHECK(std::abs(line.representative(1)) < 1e-12);
  CHECK(std::abs(std::abs(line.representative(2)) - 1.0) < 1e-12);
  const auto r = cocycle_check(a, 1, 2, 3);
  CHECK(std::abs(r.coefficient - 1.0) < 1e-12);
  CHECK(r.pass);
}

TEST_CASE("det lines are conjugation equivariant with the right dimension") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat a = random_special_unitary(4, rng), g = random_special_unitary(4, rng);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const DetLine l = spectral_det_line(a, i, j), m = spectral_det_line(Mat(g * a * g.adjoint()), i, j);
        CHECK(l.basis.cols() == j - i);
        CHECK(max_abs(l.basis.adjoint() * l.basis - Mat::Identity(j - i, j - i)) < 1e-10);
        CHECK(max_abs(projector(m.basis) - g * projector(l.basis) * g.adjoint()) < 1e-9);
      }
  }
}

TEST_CASE("flag of spectral subspaces is an orthogonal decomposition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat a = random_special_unitary(4, rng);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k <= 4; ++k) {
          const Mat pij = projector(spectral_det_line(a, i, j).basis);
          const Mat pjk = projector(spectral_det_line(a, j, k).basis);
          const Mat pik = projector(spectral_det_line(a, i, k).basis);
          CHECK(max_abs(pij * pjk) < 1e-9);
          CHECK(max_abs(pij + pjk - pik) < 1e-9);
        }
    // Each spectral subspace is invariant under A with the expected eigenvalues.
    const SortedSpectrum s = sorted_spectrum(a);
    const DetLine l = spectral_det_line(a, 1, 2);
    const std::complex<double> ev = std::exp(2.0 * std::numbers::pi * I * s.lambda(1));
    CHECK(max_abs(a * l.basis - ev * l.basis) < 1e-9);
  }
}

TEST_CASE("cocycle is unimodular on regular SU(3)") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_special_unitary(3, rng);
    for (auto [i, j, k] : {std::array{1, 2, 3}, std::array{0, 1, 2}, std::array{0, 1, 3}, std::array{0, 2, 3}}) {
      const auto r = cocycle_check(a, i, j, k);
      CHECK(r.pass);
      CHECK(std::abs(std::abs(r.coefficient) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("collapsed gaps are rejected") {
  // Eigenvalue pair collapsed at positions 1, 2: no strict gap at 1.
  const Mat a = diagonal({0.2, 0.2, -0.4});
  CHECK(cover_index_set(a) == std::vector<int>{2, 3});
  try {
    cocycle_check(a, 1, 2, 3);
    FAIL("accepted a collapsed gap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_in_cover);
  }
  CHECK_THROWS_AS(spectral_det_line(a, 1, 3), Error);
  CHECK_NOTHROW(spectral_det_line(a, 0, 2));
  CHECK_THROWS_AS(spectral_det_line(a, 2, 2), Error);
  CHECK_THROWS_AS(cocycle_check(a, 2, 1, 3), Error);
}
