// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "qhs/gerbe_cover.hpp"
#include "qhs/holonomy.hpp"
#include "qhs/prequant.hpp"
#include "qhs/verify.hpp"

using namespace qhs;

namespace {

// Sign of the chart relative to S^3 = SU(2) oriented as the boundary of the unit ball
// in R^4 = (Re g00, Im g00, Re g01, Im g01), outward normal first.
double chart_sign(const Mat& g, const Mat& dt, const Mat& da, const Mat& db) {
  Eigen::Matrix4d m;
  const Mat* cols[4] = {&g, &dt, &da, &db};
  for (int c = 0; c < 4; ++c) {
    const Mat& x = *cols[c];
    m.col(c) << x(0, 0).real(), x(0, 0).imag(), x(0, 1).real(), x(0, 1).imag();
  }
  return m.determinant() > 0 ? 1.0 : -1.0;
}


struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d. %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
}

RatVec ambient(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (auto x : xs) v(k++) = x;
  return v;
}

std::vector<QSpacePtr> axiom_spaces() {
  return {make_conjugacy_class(2, ambient({Rational(1, 8), Rational(-1, 8)})),
          make_conjugacy_class(3, ambient({Rational(1, 4), Rational(1, 12), Rational(-1, 3)})),
          make_double(2), make_fused_double(2), make_genus(2, 2)};
}

Outcome axiom_sweep(Axiom axiom, int samples) {
  Outcome o;
  std::ostringstream s;
  for (const auto& space : axiom_spaces()) {
    VerifyOptions opt;
    opt.samples = samples;
    opt.fd_step = 1e-4;
    const auto r = verify_axiom(*space, axiom, opt);
    o.pass = o.pass && r.pass;
    s << space->name() << " " << r.max_residual << "; ";
  }
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  criterion(1, "minimal-level table", 1.0, [] {
    struct Row {
      char series;
      int lo, hi, expected;
    };
    const Row rows[] = {{'A', 1, 8, 1}, {'B', 3, 8, 2}, {'C', 2, 8, 1}, {'D', 4, 8, 2}, {'E', 6, 6, 3},
                        {'E', 7, 7, 12}, {'E', 8, 8, 60}, {'F', 4, 4, 6}, {'G', 2, 2, 2}};
    Outcome o;
    std::ostringstream s;
    for (const auto& r : rows)
      for (int d = r.lo; d <= r.hi; ++d) {
        const int k = minimal_integral_level(RootSystem(LieType{r.series, d}));
        if (k != r.expected) {
          o.pass = false;
          s << r.series << d << ": computed " << k << ", table says " << r.expected << "; ";
        }
      }
    o.detail = s.str();
    return o;
  });

  criterion(2, "SU(n) alcove vertices", 0, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
      const RootSystem rs(LieType{'A', n - 1});
      const auto v = alcove_vertices(rs).vertices;
      for (int i = 0; i < n; ++i) {
        RatVec mu(n);
        for (int k = 0; k < n; ++k) mu(k) = Rational(k < i ? 1 : 0) - Rational(i, n);
        if (to_ambient(rs, v[static_cast<std::size_t>(i)]) != mu) {
          o.pass = false;
          o.detail += "n=" + std::to_string(n) + " i=" + std::to_string(i) + "; ";
        }
      }
    }
    return o;
  });

  criterion(3, "A1 level-weight counts", 0, [] {
    Outcome o;
    const RootSystem rs(LieType{'A', 1});
    for (int k = 0; k <= 10; ++k) {
      // Scan x alpha, x = m/4 in [0, k], for lattice and alcove membership.
      std::size_t scan = 0;
      for (int m = 0; m <= 4 * k; ++m) {
        CartanVector x(1);
        x << Rational(m, 4);
        const bool in_alcove = k == 0 ? m == 0 : alcove_contains(rs, x, k).contained;
        if (in_alcove && is_integer(Rational(2 * m, 4))) ++scan;
      }
      const std::size_t got = level_weights(rs, k).weights.size();
      if (got != static_cast<std::size_t>(k + 1) || scan != got) {
        o.pass = false;
        o.detail += "k=" + std::to_string(k) + "; ";
      }
    }
    return o;
  });

  criterion(4, "A1 quarter-class criterion", 0, [] {
    Outcome o;
    const RootSystem rs(LieType{'A', 1});
    const CartanVector xi = from_ambient(rs, ambient({Rational(1, 4), Rational(-1, 4)}));
    for (int k = 1; k <= 12; ++k) {
      const bool answer = class_prequantizable(rs, xi, k).answer;
      const auto weights = level_weights(rs, k).weights;
      const bool member = std::find(weights.begin(), weights.end(), CartanVector(xi * Rational(k))) != weights.end();
      if (answer != (k % 2 == 0) || answer != member) {
        o.pass = false;
        o.detail += "k=" + std::to_string(k) + "; ";
      }
    }
    return o;
  });

  criterion(5, "moment condition", 10.0, [] { return axiom_sweep(Axiom::moment, 50); });
  criterion(6, "relative cocycle d omega = Psi^* eta", 60.0, [] { return axiom_sweep(Axiom::cocycle, 20); });

  criterion(7, "minimal degeneracy", 0, [] {
    Outcome o = axiom_sweep(Axiom::min_degeneracy, 20);
    const auto quarter = make_conjugacy_class(2, ambient({Rational(1, 4), Rational(-1, 4)}));
    std::mt19937_64 rng(0);
    for (int i = 0; i < 20; ++i) {
      const Point m = quarter->sample(rng);
      const auto b = quarter->tangent_basis(m);
      const bool zero_form = b.size() == 2 && std::abs(quarter->omega(m, b[0], b[1])) < 1e-12;
      if (!zero_form) o.pass = false;
    }
    const auto r = verify_axiom(*quarter, Axiom::min_degeneracy, {});
    o.pass = o.pass && r.pass;
    o.detail += "quarter class kernel = tangent dim 2: " + std::string(o.pass ? "yes" : "no");
    return o;
  });

  criterion(8, "integral of eta over SU(2)", 30.0, [] {
    const std::complex<double> i(0.0, 1.0);
    const int nt = 400, na = 4, nb = 4;
    const double pi = std::numbers::pi, ht = (pi / 2) / nt, ha = 2 * pi / na, hb = 2 * pi / nb;
    double total = 0.0;
    for (int p = 0; p < nt; ++p)
      for (int q = 0; q < na; ++q)
        for (int r = 0; r < nb; ++r) {
          const double t = (p + 0.5) * ht, a = (q + 0.5) * ha, b = (r + 0.5) * hb;
          const auto ea = std::exp(i * a), eb = std::exp(i * b);
          Mat g(2, 2), dt(2, 2), da(2, 2), db(2, 2);
          g << ea * std::cos(t), eb * std::sin(t), -std::conj(eb) * std::sin(t), std::conj(ea) * std::cos(t);
          dt << -ea * std::sin(t), eb * std::cos(t), -std::conj(eb) * std::cos(t), -std::conj(ea) * std::sin(t);
          da << i * ea * std::cos(t), 0.0, 0.0, -i * std::conj(ea) * std::cos(t);
          db << 0.0, i * eb * std::sin(t), i * std::conj(eb) * std::sin(t), 0.0;
          total += chart_sign(g, dt, da, db) * eval_eta(g, dt, da, db) * ht * ha * hb;
        }
    return Outcome{std::abs(total - 1.0) < 1e-2, "integral = " + std::to_string(total)};
  });

  criterion(9, "holonomy", 0, [] {
    Outcome o;
    std::mt19937_64 rng(0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Mat xi = random_algebra(3, rng);
      for (int n : {1, 3, 16, 128}) worst = std::max(worst, max_abs(holonomy({MatList(static_cast<std::size_t>(n), xi)}) - exp_algebra(xi)));
    }
    const auto study = holonomy_convergence(random_gauge_data(3, 0));
    o.pass = worst < 1e-12 && std::abs(study.order - 2.0) <= 0.3;
    o.detail = "constant error " + std::to_string(worst) + ", fitted order " + std::to_string(study.order);
    return o;
  });

  criterion(10, "gerbe cocycle", 0, [] {
    Outcome o;
    std::mt19937_64 rng(0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = cocycle_check(random_special_unitary(3, rng), 1, 2, 3);
      worst = std::max(worst, std::abs(std::abs(r.coefficient) - 1.0));
      o.pass = o.pass && r.pass;
    }
    o.pass = o.pass && worst < 1e-8;
    Mat collapsed = torus_element(Eigen::Vector3d(0.2, 0.2, -0.4));
    bool rejected = false;
    try {
      cocycle_check(collapsed, 1, 2, 3);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::not_in_cover;
    }
    o.pass = o.pass && rejected;
    o.detail = "max ||c| - 1| = " + std::to_string(worst) + ", collapsed gap rejected: " + (rejected ? "yes" : "no");
    return o;
  });

  criterion(11, "reduction rank", 0, [] {
    Outcome o;
    std::mt19937_64 rng(0);
    const auto g2 = make_genus(2, 2), g1 = make_genus(2, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const Mat a = random_special_unitary(2, rng), b = random_special_unitary(2, rng);
      if (reduction_rank_check(*g2, {a, b, b, a}) != 3) o.pass = false;
      const Mat h = random_special_unitary(2, rng);
      std::uniform_real_distribution<double> u(0.05, 0.45);
      Eigen::Vector2d l1, l2;
      l1 << u(rng), 0;
      l1(1) = -l1(0);
      l2 << u(rng), 0;
      l2(1) = -l2(0);
      if (reduction_rank_check(*g1, {h * torus_element(l1) * h.adjoint(), h * torus_element(l2) * h.adjoint()}) != 2) o.pass = false;
    }
    return o;
  });

  criterion(12, "fusion closure", 0, [] {
    Outcome o;
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> level(1, 12), part(0, 6), den(1, 12);
    for (LieType t : {LieType{'A', 1}, LieType{'A', 2}}) {
      const RootSystem rs(t);
      const auto vertices = alcove_vertices(rs).vertices;
      auto draw = [&] {
        while (true) {
          CartanVector xi = CartanVector::Zero(rs.rank());
          int total = 0;
          std::vector<int> w(vertices.size());
          for (auto& x : w) total += (x = part(rng));
          if (total == 0) continue;
          for (std::size_t j = 0; j < w.size(); ++j) xi += Rational(w[j], total) * vertices[j];
          const int q = den(rng);
          for (auto& c : xi) c = Rational(boost::rational_cast<std::int64_t>(c * q), q);
          if (alcove_contains(rs, xi, 1).contained) return xi;
        }
      };
      for (int trial = 0; trial < 100; ++trial) {
        const int k = level(rng);
        const CartanVector x1 = draw(), x2 = draw();
        const PrequantVerdict v1 = class_prequantizable(rs, x1, k), v2 = class_prequantizable(rs, x2, k);
        const std::vector<PrequantVerdict> both = {v1, v2};
        if (fusion_prequantizable(both) != (v1.answer && v2.answer)) o.pass = false;
      }
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
