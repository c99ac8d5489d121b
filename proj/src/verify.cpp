#include "qhs/verify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace qhs {

namespace {

constexpr double kConditionLimit = 1e8;

Tangent combine(const std::vector<Tangent>& basis, const Eigen::VectorXd& c) {
  Tangent out(basis.front().size(), Mat::Zero(basis.front().front().rows(), basis.front().front().cols()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t f = 0; f < out.size(); ++f) out[f] += c(static_cast<Eigen::Index>(k)) * basis[k][f];
  return out;
}


/// Generators of -[X, Y] = X_[x,y] for the fields X_x, X_y.
Tangent field_bracket(const Tangent& x, const Tangent& y) {
  Tangent out;
  for (std::size_t f = 0; f < x.size(); ++f) out.push_back(-bracket(x[f], y[f]));
  return out;
}

/// Three random tangent vectors, orthonormal when dim >= 3.
std::array<Tangent, 3> random_triple(const std::vector<Tangent>& basis, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  std::normal_distribution<double> normal;
  Eigen::MatrixXd c(d, 3);
  for (Eigen::Index i = 0; i < d; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = normal(rng);
  if (d >= 3) c = Eigen::HouseholderQR<Eigen::MatrixXd>(c).householderQ() * Eigen::MatrixXd::Identity(d, 3);
  return {combine(basis, c.col(0)), combine(basis, c.col(1)), combine(basis, c.col(2))};
}

Tangent random_tangent(const std::vector<Tangent>& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (auto& v : c) v = normal(rng);
  return combine(basis, c);
}

MatList random_algebra_list(int count, int n, std::mt19937_64& rng) {
  MatList out;
  for (int j = 0; j < count; ++j) out.push_back(random_algebra(n, rng));
  return out;
}

Eigen::VectorXd flatten(const MatList& mats) {
  Eigen::Index size = 0;
  for (const auto& m : mats) size += 2 * m.size();
  Eigen::VectorXd out(size);
  Eigen::Index pos = 0;
  for (const auto& m : mats)
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      out(pos++) = m.data()[k].real();
      out(pos++) = m.data()[k].imag();
    }
  return out;
}

int numerical_rank(const Eigen::MatrixXd& m, double relative, double floor) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  if (sigma.size() == 0) return 0;
  const double cutoff = std::max(relative * sigma(0), floor);
  return static_cast<int>((sigma.array() > cutoff).count());
}

/// Central-difference dPsi along the field with generators v.
MatList moment_derivative(const QSpace& space, const Point& m, const Tangent& v, double h) {
  const MatList plus = space.moment(space.flow(m, v, h));
  const MatList minus = space.moment(space.flow(m, v, -h));
  MatList out;
  for (std::size_t j = 0; j < plus.size(); ++j) out.push_back((plus[j] - minus[j]) / (2.0 * h));
  return out;
}

double cocycle_residual(const QSpace& space, const Point& m, const std::array<Tangent, 3>& t, double h) {
  return std::abs(exterior_derivative(space, m, t[0], t[1], t[2], h) - pulled_back_eta(space, m, t[0], t[1], t[2], h));
}

double moment_residual(const QSpace& space, const Point& m, const std::vector<Tangent>& basis, std::mt19937_64& rng) {
  const MatList xi = random_algebra_list(space.moment_count(), space.n(), rng);
  const Tangent w = random_tangent(basis, rng);
  const double lhs = space.omega(m, space.generating_field(xi, m), w);
  const MatList psi = space.moment(m);
  const MatList dpsi = space.moment_differential(m, w);
  double rhs = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const Mat theta = psi[j].adjoint() * dpsi[j] + dpsi[j] * psi[j].adjoint();
    rhs += 0.5 * basic_form(theta, xi[j]);
  }
  return std::abs(lhs - rhs);
}

double degeneracy_residual(const QSpace& space, const Point& m, const std::vector<Tangent>& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd w(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) w(i, j) = space.omega(m, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  const int kernel = static_cast<int>(d) - numerical_rank(w, 1e-7, 1e-6);

  // {xi : (Ad_Psi + 1) xi = 0}, factor by factor, pushed to T_m M.
  const int n = space.n();
  const auto alg = algebra_basis(n);
  const auto a = static_cast<Eigen::Index>(alg.size());
  const MatList psi = space.moment(m);
  std::vector<MatList> kernel_gens;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    Eigen::MatrixXd op(a, a);
    for (Eigen::Index c = 0; c < a; ++c) {
      const auto& x = alg[static_cast<std::size_t>(c)];
      op.col(c) = algebra_coordinates(Mat(adjoint_action(psi[j], x) + x), alg);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = 1e-7 * std::max(sigma(0), 1.0);
    for (Eigen::Index c = 0; c < a; ++c) {
      if (sigma(c) > cutoff) continue;
      MatList xi(psi.size(), Mat::Zero(n, n));
      xi[j] = from_algebra_coordinates<double>(Eigen::VectorXd(svd.matrixV().col(c)), alg);
      kernel_gens.push_back(std::move(xi));
    }
  }
  int field_rank = 0;
  if (!kernel_gens.empty()) {
    const Eigen::VectorXd first = flatten(space.tangent_matrices(m, space.generating_field(kernel_gens[0], m)));
    Eigen::MatrixXd fields(first.size(), static_cast<Eigen::Index>(kernel_gens.size()));
    for (std::size_t c = 0; c < kernel_gens.size(); ++c)
      fields.col(static_cast<Eigen::Index>(c)) = flatten(space.tangent_matrices(m, space.generating_field(kernel_gens[c], m)));
    field_rank = numerical_rank(fields, 1e-7, 1e-6);
  }
  return std::abs(kernel - field_rank);
}

double equivariance_residual(const QSpace& space, const Point& m, std::mt19937_64& rng) {
  MatList g;
  for (int j = 0; j < space.moment_count(); ++j) g.push_back(random_special_unitary(space.n(), rng));
  const MatList moved = space.moment(space.act(g, m));
  const MatList psi = space.moment(m);
  double worst = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) worst = std::max(worst, max_abs(moved[j] - adjoint_action(g[j], psi[j])));
  return worst;
}

}  // namespace

Axiom parse_axiom(std::string_view name) {
  if (name == "cocycle") return Axiom::cocycle;
  if (name == "moment") return Axiom::moment;
  if (name == "min_degeneracy" || name == "min-degeneracy") return Axiom::min_degeneracy;
  if (name == "equivariance") return Axiom::equivariance;
  throw Error(ErrorCode::unknown_axiom, "unknown axiom '" + std::string(name) + "'");
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::cocycle: return "cocycle";
    case Axiom::moment: return "moment";
    case Axiom::min_degeneracy: return "min_degeneracy";
    case Axiom::equivariance: return "equivariance";
  }
  return "?";
}

double default_tolerance(Axiom axiom) {
  switch (axiom) {
    case Axiom::cocycle: return 1e-4;
    case Axiom::moment: return 1e-8;
    case Axiom::min_degeneracy: return 0.5;
    case Axiom::equivariance: return 1e-10;
  }
  return 0.0;
}

std::mt19937_64 sample_rng(std::uint64_t seed, int index) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index));
}

double exterior_derivative(const QSpace& space, const Point& m, const Tangent& x, const Tangent& y, const Tangent& z,
                           double h) {
  auto along = [&](const Tangent& dir, const Tangent& a, const Tangent& b) {
    return (space.omega(space.flow(m, dir, h), a, b) - space.omega(space.flow(m, dir, -h), a, b)) / (2.0 * h);
  };
  // [X_x, X_y] = -X_[x,y]
  const Tangent xy = field_bracket(x, y), xz = field_bracket(x, z), yz = field_bracket(y, z);
  return along(x, y, z) - along(y, x, z) + along(z, x, y) - space.omega(m, xy, z) + space.omega(m, xz, y) -
         space.omega(m, yz, x);
}

double pulled_back_eta(const QSpace& space, const Point& m, const Tangent& x, const Tangent& y, const Tangent& z,
                       double h) {
  const MatList psi = space.moment(m);
  const MatList dx = moment_derivative(space, m, x, h);
  const MatList dy = moment_derivative(space, m, y, h);
  const MatList dz = moment_derivative(space, m, z, h);
  double total = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) total += eval_eta(psi[j], dx[j], dy[j], dz[j]);
  return total;
}

VerificationReport verify_axiom(const QSpace& space, Axiom axiom, const VerifyOptions& options) {
  if (options.samples < 1) throw Error(ErrorCode::invalid_level, "samples must be at least 1");
  if (!(options.fd_step > 1e-6 && options.fd_step < 1e-2)) {
    throw Error(ErrorCode::invalid_level, "fd_step must lie in (1e-6, 1e-2)");
  }
  VerificationReport report;
  report.axiom = axiom;
  report.samples = options.samples;
  report.tolerance = options.tol.value_or(default_tolerance(axiom));

  for (int i = 0; i < options.samples; ++i) {
    auto rng = sample_rng(options.seed, i);
    Point m;
    std::vector<Tangent> basis;
    for (int attempt = 0;; ++attempt) {
      m = space.sample(rng);
      double condition = 1.0;
      basis = space.tangent_basis(m, &condition);
      if (basis.size() < 3 || condition <= kConditionLimit) break;
      if (attempt == 100) throw Error(ErrorCode::degenerate_sample, space.name() + ": no well-conditioned sample found");
      ++report.resampled;
    }

    double residual = 0.0;
    switch (axiom) {
      case Axiom::cocycle:
        if (!basis.empty()) residual = cocycle_residual(space, m, random_triple(basis, rng), options.fd_step);
        break;
      case Axiom::moment:
        if (!basis.empty()) residual = moment_residual(space, m, basis, rng);
        break;
      case Axiom::min_degeneracy:
        residual = degeneracy_residual(space, m, basis);
        break;
      case Axiom::equivariance:
        residual = equivariance_residual(space, m, rng);
        break;
    }
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.pass = report.max_residual < report.tolerance;
  return report;
}

int reduction_rank_check(const QSpace& space, const Point& m, double fd_step) {
  if (space.moment_count() != 1) throw Error(ErrorCode::group_size_mismatch, "reduction needs an SU(n)-valued moment map");
  const Mat psi = space.moment(m)[0];
  if (max_abs(psi - Mat::Identity(psi.rows(), psi.cols())) >= 1e-8) {
    throw Error(ErrorCode::not_in_level_set, "point is not in the identity level set of the moment map");
  }
  const auto basis = space.tangent_basis(m);
  if (basis.empty()) return 0;
  const Eigen::VectorXd first = flatten(moment_derivative(space, m, basis[0], fd_step));
  Eigen::MatrixXd jac(first.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    jac.col(static_cast<Eigen::Index>(k)) = flatten(moment_derivative(space, m, basis[k], fd_step));
  return numerical_rank(jac, 1e-7, 1e-6);
}

}  // namespace qhs
