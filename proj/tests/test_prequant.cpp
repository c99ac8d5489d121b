#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qhs/prequant.hpp"

using namespace qhs;

namespace {

CartanVector a1(Rational x) {
  CartanVector v(1);
  v << x;
  return v;
}

// A random alcove point whose barycentric coordinates have denominator at most 12.
CartanVector random_alcove_point(const RootSystem& rs, std::mt19937_64& rng) {
  const auto vertices = alcove_vertices(rs).vertices;
  std::uniform_int_distribution<int> w(0, 6);
  std::uniform_int_distribution<int> den(1, 12);
  while (true) {
    const int q = den(rng);
    std::vector<int> parts(vertices.size());
    int total = 0;
    for (auto& p : parts) total += (p = w(rng));
    if (total == 0) continue;
    CartanVector xi = CartanVector::Zero(rs.rank());
    for (std::size_t j = 0; j < parts.size(); ++j) xi += Rational(parts[j], total) * vertices[j];
    // Round to denominator q inside the alcove by scaling towards the origin.
    for (auto& c : xi) c = Rational(boost::rational_cast<std::int64_t>(c * q), q);
    if (alcove_contains(rs, xi, 1).contained) return xi;
  }
}

}  // namespace

TEST_CASE("A1 quarter class is integral exactly at even levels") {
  const RootSystem rs(LieType{'A', 1});
  for (int k = 1; k <= 12; ++k) {
    const auto v = class_prequantizable(rs, a1(Rational(1, 4)), k);
    CHECK(v.answer == (k % 2 == 0));
    CHECK(v.level == k);
    if (v.answer) {
      REQUIRE(v.witness);
      CHECK(*v.witness == a1(Rational(k, 4)));
    } else {
      CHECK_FALSE(v.violated.empty());
    }
  }
}

TEST_CASE("integral classes are exactly the rescaled level weights") {
  for (LieType t : {LieType{'A', 1}, LieType{'A', 2}, LieType{'B', 2}, LieType{'G', 2}}) {
    const RootSystem rs(t);
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(t.name());
      CAPTURE(k);
      std::set<std::vector<Rational>> expected;
      for (const auto& mu : level_weights(rs, k).weights) {
        const CartanVector xi = mu / Rational(k);
        expected.insert({xi.data(), xi.data() + xi.size()});
        CHECK(class_prequantizable(rs, xi, k).answer);
      }
      // Every alcove point on the 1/(k*D) grid that passes must be one of them.
      const int den = 12 * k;
      for (int a = 0; a <= den; ++a)
        for (int b = 0; b <= (rs.rank() > 1 ? den : 0); ++b) {
          CartanVector xi(rs.rank());
          xi(0) = Rational(a, den);
          if (rs.rank() > 1) xi(1) = Rational(b, den);
          if (!alcove_contains(rs, xi, 1).contained) continue;
          const bool in = expected.count({xi.data(), xi.data() + xi.size()}) > 0;
          CHECK(class_prequantizable(rs, xi, k).answer == in);
        }
    }
  }
}

TEST_CASE("class test rejects bad input") {
  const RootSystem rs(LieType{'A', 1});
  CHECK_THROWS_AS(class_prequantizable(rs, a1(Rational(1, 4)), 0), Error);
  try {
    class_prequantizable(rs, a1(Rational(3, 4)), 2);
    FAIL("accepted a point outside the alcove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::outside_alcove);
  }
}

TEST_CASE("torsion levels") {
  CHECK(torsion_level_admissible(1, 5));
  CHECK(torsion_level_admissible(3, 6));
  CHECK_FALSE(torsion_level_admissible(4, 6));
  CHECK_THROWS_AS(torsion_level_admissible(0, 2), Error);
  CHECK_THROWS_AS(torsion_level_admissible(2, 0), Error);
}

TEST_CASE("fusion verdict is the conjunction of the factors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> level(1, 12);
  for (LieType t : {LieType{'A', 1}, LieType{'A', 2}}) {
    const RootSystem rs(t);
    for (int trial = 0; trial < 100; ++trial) {
      const int k = level(rng);
      const CartanVector x1 = random_alcove_point(rs, rng), x2 = random_alcove_point(rs, rng);
      const std::vector<PrequantVerdict> v = {class_prequantizable(rs, x1, k), class_prequantizable(rs, x2, k)};
      const bool oracle = weight_lattice_contains(rs, CartanVector(x1 * Rational(k))) &&
                          weight_lattice_contains(rs, CartanVector(x2 * Rational(k)));
      CHECK(fusion_prequantizable(v) == oracle);
    }
  }
  CHECK(fusion_prequantizable({}));
  const RootSystem rs(LieType{'A', 1});
  const std::vector<PrequantVerdict> mixed = {class_prequantizable(rs, a1(Rational(1, 4)), 2),
                                              class_prequantizable(rs, a1(Rational(1, 4)), 4)};
  CHECK_THROWS_AS(fusion_prequantizable(mixed), Error);
}
