#include "qhs/qspace.hpp"

#include <algorithm>
#include <map>

#include <Eigen/SVD>

#include "qhs/alcove.hpp"

namespace qhs {

namespace {

/// B(a, b)(V, W) for g-valued 1-forms given by their values on V and W.
double pair_forms(const Mat& a_v, const Mat& b_w, const Mat& a_w, const Mat& b_v) {
  return basic_form(a_v, b_w) - basic_form(a_w, b_v);
}

Eigen::VectorXd flatten(const MatList& mats) {
  Eigen::Index size = 0;
  for (const auto& m : mats) size += 2 * m.size();
  Eigen::VectorXd out(size);
  Eigen::Index pos = 0;
  for (const auto& m : mats) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out(pos++) = m(i, j).real();
        out(pos++) = m(i, j).imag();
      }
  }
  return out;
}

}  // namespace

QSpace::QSpace(int n, std::vector<FactorKind> kinds, int moments) : n_(n), kinds_(std::move(kinds)), moments_(moments) {
  if (n < 2) throw Error(ErrorCode::group_size_mismatch, "SU(n) needs n >= 2");
}

void QSpace::require_point(const Point& m) const {
  if (static_cast<int>(m.size()) != factor_count()) {
    throw Error(ErrorCode::dimension_mismatch, name() + ": point has " + std::to_string(m.size()) + " factors");
  }
  for (const auto& g : m)
    if (g.rows() != n_ || g.cols() != n_) throw Error(ErrorCode::group_size_mismatch, name() + ": factor size");
}

void QSpace::require_group(const MatList& g) const {
  if (static_cast<int>(g.size()) != moments_) {
    throw Error(ErrorCode::group_size_mismatch,
                name() + ": acting group has " + std::to_string(moments_) + " factors, got " + std::to_string(g.size()));
  }
  for (const auto& x : g)
    if (x.rows() != n_ || x.cols() != n_) throw Error(ErrorCode::group_size_mismatch, name() + ": group element size");
}

MatList QSpace::tangent_matrices(const Point& m, const Tangent& v) const {
  require_point(m);
  MatList out;
  out.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Mat moved = v[k] * m[k];
    out.push_back(kinds_[k] == FactorKind::group ? moved : Mat(moved - m[k] * v[k]));
  }
  return out;
}

Point QSpace::flow(const Point& m, const Tangent& v, double t) const {
  require_point(m);
  Point out;
  out.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Mat e = exp_algebra(Mat(t * v[k]));
    out.push_back(kinds_[k] == FactorKind::group ? Mat(e * m[k]) : Mat(e * m[k] * e.adjoint()));
  }
  return out;
}

std::vector<Tangent> QSpace::tangent_basis(const Point& m, double* condition) const {
  require_point(m);
  const auto basis = algebra_basis(n_);
  const auto per_factor = static_cast<Eigen::Index>(basis.size());
  const auto factors = static_cast<Eigen::Index>(m.size());

  Eigen::MatrixXd push(2 * n_ * n_ * factors, per_factor * factors);
  for (Eigen::Index f = 0; f < factors; ++f) {
    for (Eigen::Index b = 0; b < per_factor; ++b) {
      Tangent v(m.size(), Mat::Zero(n_, n_));
      v[static_cast<std::size_t>(f)] = basis[static_cast<std::size_t>(b)];
      push.col(f * per_factor + b) = flatten(tangent_matrices(m, v));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(push, Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  // Absolute floor: at central points every pushed-forward generator is round-off.
  const double cutoff = std::max(1e-8 * sigma(0), 1e-10);

  std::vector<Tangent> out;
  double smallest = sigma(0);
  for (Eigen::Index k = 0; k < sigma.size() && sigma(k) > cutoff; ++k) {
    smallest = sigma(k);
    const Eigen::VectorXd coeff = svd.matrixV().col(k) / sigma(k);
    Tangent v;
    for (Eigen::Index f = 0; f < factors; ++f) {
      v.push_back(from_algebra_coordinates<double>(coeff.segment(f * per_factor, per_factor), basis));
    }
    out.push_back(std::move(v));
  }
  if (condition) *condition = out.empty() ? 1.0 : sigma(0) / smallest;
  return out;
}

// ---------------------------------------------------------------------------

ConjugacyClass::ConjugacyClass(int n, const RatVec& lambda) : QSpace(n, {FactorKind::orbit}, 1), lambda_(lambda) {
  const RootSystem rs(LieType{'A', n - 1});
  if (lambda.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "class parameter needs " + std::to_string(n) + " coordinates");
  }
  const CartanVector xi = from_ambient(rs, lambda);
  if (!alcove_contains(rs, xi, 1).contained) {
    throw Error(ErrorCode::outside_alcove, to_string(lambda) + " is not in the fundamental alcove of SU(" + std::to_string(n) + ")");
  }
  base_ = torus_element(to_double(lambda));
}

std::string ConjugacyClass::name() const { return "conjugacy_class(" + std::to_string(n()) + ", " + to_string(lambda_) + ")"; }

int ConjugacyClass::dim() const {
  // Eigenvalues exp(2 pi i lambda_k) coincide when lambda_k agree modulo 1.
  std::map<Rational, int> mult;
  for (Eigen::Index k = 0; k < lambda_.size(); ++k) {
    Rational frac = lambda_(k) - Rational(boost::rational_cast<std::int64_t>(lambda_(k)));
    if (frac < Rational(0)) frac += Rational(1);
    ++mult[frac];
  }
  int centralizer = -1;
  for (const auto& [value, count] : mult) centralizer += count * count;
  return n() * n() - 1 - centralizer;
}

Point ConjugacyClass::sample(std::mt19937_64& rng) const {
  const Mat h = random_special_unitary(n(), rng);
  return {h * base_ * h.adjoint()};
}

Point ConjugacyClass::act(const MatList& g, const Point& m) const {
  require_group(g);
  require_point(m);
  return {adjoint_action(g[0], m[0])};
}

Tangent ConjugacyClass::act_tangent(const MatList& g, const Point&, const Tangent& v) const {
  require_group(g);
  return {adjoint_action(g[0], v[0])};
}

MatList ConjugacyClass::moment(const Point& m) const {
  require_point(m);
  return {m[0]};
}

MatList ConjugacyClass::moment_differential(const Point& m, const Tangent& v) const { return tangent_matrices(m, v); }

double ConjugacyClass::omega(const Point& m, const Tangent& v, const Tangent& w) const {
  require_point(m);
  const Mat& g = m[0];
  return 0.5 * basic_form(Mat(adjoint_action(g.adjoint(), v[0]) - adjoint_action(g, v[0])), w[0]);
}

Tangent ConjugacyClass::generating_field(const MatList& xi, const Point& m) const {
  require_group(xi);
  require_point(m);
  return {-xi[0]};
}

// ---------------------------------------------------------------------------

DoubleSpace::DoubleSpace(int n) : QSpace(n, {FactorKind::group, FactorKind::group}, 2) {}

std::string DoubleSpace::name() const { return "double(" + std::to_string(n()) + ")"; }

int DoubleSpace::dim() const { return 2 * (n() * n() - 1); }

Point DoubleSpace::sample(std::mt19937_64& rng) const {
  Mat a = random_special_unitary(n(), rng);
  Mat b = random_special_unitary(n(), rng);
  return {std::move(a), std::move(b)};
}

Point DoubleSpace::act(const MatList& g, const Point& m) const {
  require_group(g);
  require_point(m);
  return {g[0] * m[0] * g[1].adjoint(), g[1] * m[1] * g[0].adjoint()};
}

Tangent DoubleSpace::act_tangent(const MatList& g, const Point&, const Tangent& v) const {
  require_group(g);
  return {adjoint_action(g[0], v[0]), adjoint_action(g[1], v[1])};
}

MatList DoubleSpace::moment(const Point& m) const {
  require_point(m);
  return {m[0] * m[1], m[0].adjoint() * m[1].adjoint()};
}

MatList DoubleSpace::moment_differential(const Point& m, const Tangent& v) const {
  const MatList t = tangent_matrices(m, v);
  const Mat& a = m[0];
  const Mat& b = m[1];
  const Mat ai = a.adjoint(), bi = b.adjoint();
  return {t[0] * b + a * t[1], -ai * t[0] * ai * bi - ai * bi * t[1] * bi};
}

double DoubleSpace::omega(const Point& m, const Tangent& v, const Tangent& w) const {
  require_point(m);
  const Mat ai = m[0].adjoint(), bi = m[1].adjoint();
  // theta^R of the factors is the generator itself; theta^L = Ad_{g^-1} generator.
  const Mat& ra_v = v[0];
  const Mat& ra_w = w[0];
  const Mat& rb_v = v[1];
  const Mat& rb_w = w[1];
  const Mat la_v = ai * v[0] * m[0], la_w = ai * w[0] * m[0];
  const Mat lb_v = bi * v[1] * m[1], lb_w = bi * w[1] * m[1];
  // 1/2 (B(Pr2^* theta^R, Pr1^* theta^L) + B(Pr2^* theta^L, Pr1^* theta^R))
  return 0.5 * (pair_forms(rb_v, la_w, rb_w, la_v) + pair_forms(lb_v, ra_w, lb_w, ra_v));
}

Tangent DoubleSpace::generating_field(const MatList& xi, const Point& m) const {
  require_group(xi);
  require_point(m);
  return {-(xi[0] - adjoint_action(m[0], xi[1])), -(xi[1] - adjoint_action(m[1], xi[0]))};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FactorKind> concat_kinds(const QSpace& a, const QSpace& b) {
  auto kinds = a.factor_kinds();
  kinds.insert(kinds.end(), b.factor_kinds().begin(), b.factor_kinds().end());
  return kinds;
}

int checked_size(const QSpacePtr& a, const QSpacePtr& b) {
  if (!a || !b) throw Error(ErrorCode::group_size_mismatch, "missing space");
  if (a->n() != b->n()) {
    throw Error(ErrorCode::group_size_mismatch,
                "cannot combine SU(" + std::to_string(a->n()) + ") and SU(" + std::to_string(b->n()) + ") spaces");
  }
  return a->n();
}

MatList concat(MatList a, const MatList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ProductSpace::ProductSpace(QSpacePtr first, QSpacePtr second)
    : QSpace(checked_size(first, second), concat_kinds(*first, *second), first->moment_count() + second->moment_count()),
      first_(std::move(first)),
      second_(std::move(second)) {}

std::pair<MatList, MatList> ProductSpace::split_factors(const MatList& v) const {
  const auto cut = v.begin() + first_->factor_count();
  return {MatList(v.begin(), cut), MatList(cut, v.end())};
}

std::pair<MatList, MatList> ProductSpace::split_moments(const MatList& g) const {
  require_group(g);
  const auto cut = g.begin() + first_->moment_count();
  return {MatList(g.begin(), cut), MatList(cut, g.end())};
}

std::string ProductSpace::name() const { return "product(" + first_->name() + ", " + second_->name() + ")"; }

int ProductSpace::dim() const { return first_->dim() + second_->dim(); }

Point ProductSpace::sample(std::mt19937_64& rng) const {
  Point a = first_->sample(rng);
  return concat(std::move(a), second_->sample(rng));
}

Point ProductSpace::act(const MatList& g, const Point& m) const {
  require_point(m);
  const auto [g1, g2] = split_moments(g);
  const auto [m1, m2] = split_factors(m);
  return concat(first_->act(g1, m1), second_->act(g2, m2));
}

Tangent ProductSpace::act_tangent(const MatList& g, const Point& m, const Tangent& v) const {
  const auto [g1, g2] = split_moments(g);
  const auto [m1, m2] = split_factors(m);
  const auto [v1, v2] = split_factors(v);
  return concat(first_->act_tangent(g1, m1, v1), second_->act_tangent(g2, m2, v2));
}

MatList ProductSpace::moment(const Point& m) const {
  require_point(m);
  const auto [m1, m2] = split_factors(m);
  return concat(first_->moment(m1), second_->moment(m2));
}

MatList ProductSpace::moment_differential(const Point& m, const Tangent& v) const {
  const auto [m1, m2] = split_factors(m);
  const auto [v1, v2] = split_factors(v);
  return concat(first_->moment_differential(m1, v1), second_->moment_differential(m2, v2));
}

double ProductSpace::omega(const Point& m, const Tangent& v, const Tangent& w) const {
  require_point(m);
  const auto [m1, m2] = split_factors(m);
  const auto [v1, v2] = split_factors(v);
  const auto [w1, w2] = split_factors(w);
  return first_->omega(m1, v1, w1) + second_->omega(m2, v2, w2);
}

Tangent ProductSpace::generating_field(const MatList& xi, const Point& m) const {
  const auto [x1, x2] = split_moments(xi);
  const auto [m1, m2] = split_factors(m);
  return concat(first_->generating_field(x1, m1), second_->generating_field(x2, m2));
}

// ---------------------------------------------------------------------------

namespace {

const QSpacePtr& require_fusible(const QSpacePtr& s) {
  if (!s || s->moment_count() < 2) throw Error(ErrorCode::group_size_mismatch, "internal fusion needs at least two moment factors");
  return s;
}

}  // namespace

InternalFusion::InternalFusion(QSpacePtr inner, std::string label)
    : QSpace(require_fusible(inner)->n(), inner->factor_kinds(), inner->moment_count() - 1),
      inner_(std::move(inner)),
      label_(std::move(label)) {}

MatList InternalFusion::expand(const MatList& g) const {
  require_group(g);
  MatList out;
  out.reserve(g.size() + 1);
  out.push_back(g[0]);
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::string InternalFusion::name() const { return label_.empty() ? "internal_fusion(" + inner_->name() + ")" : label_; }

int InternalFusion::dim() const { return inner_->dim(); }

Point InternalFusion::sample(std::mt19937_64& rng) const { return inner_->sample(rng); }

Point InternalFusion::act(const MatList& g, const Point& m) const { return inner_->act(expand(g), m); }

Tangent InternalFusion::act_tangent(const MatList& g, const Point& m, const Tangent& v) const {
  return inner_->act_tangent(expand(g), m, v);
}

MatList InternalFusion::moment(const Point& m) const {
  const MatList psi = inner_->moment(m);
  MatList out;
  out.push_back(psi[0] * psi[1]);
  out.insert(out.end(), psi.begin() + 2, psi.end());
  return out;
}

MatList InternalFusion::moment_differential(const Point& m, const Tangent& v) const {
  const MatList psi = inner_->moment(m);
  const MatList d = inner_->moment_differential(m, v);
  MatList out;
  out.push_back(d[0] * psi[1] + psi[0] * d[1]);
  out.insert(out.end(), d.begin() + 2, d.end());
  return out;
}

double InternalFusion::omega(const Point& m, const Tangent& v, const Tangent& w) const {
  const MatList psi = inner_->moment(m);
  const MatList dv = inner_->moment_differential(m, v);
  const MatList dw = inner_->moment_differential(m, w);
  const Mat p0i = psi[0].adjoint(), p1i = psi[1].adjoint();
  const double correction = pair_forms(p0i * dv[0], dw[1] * p1i, p0i * dw[0], dv[1] * p1i);
  return inner_->omega(m, v, w) - 0.5 * correction;
}

Tangent InternalFusion::generating_field(const MatList& xi, const Point& m) const {
  return inner_->generating_field(expand(xi), m);
}

// ---------------------------------------------------------------------------

QSpacePtr make_conjugacy_class(int n, const RatVec& lambda) { return std::make_shared<ConjugacyClass>(n, lambda); }

QSpacePtr make_double(int n) { return std::make_shared<DoubleSpace>(n); }

QSpacePtr make_fused_double(int n) {
  return std::make_shared<InternalFusion>(make_double(n), "fused_double(" + std::to_string(n) + ")");
}

QSpacePtr make_genus(int n, int h) {
  if (h < 1) throw Error(ErrorCode::invalid_level, "genus must be at least 1");
  const std::string label = "genus(" + std::to_string(n) + ", " + std::to_string(h) + ")";
  if (h == 1) return std::make_shared<InternalFusion>(make_double(n), label);
  QSpacePtr space = make_fused_double(n);
  for (int j = 2; j < h; ++j) space = make_fusion(space, make_fused_double(n));
  return std::make_shared<InternalFusion>(std::make_shared<ProductSpace>(space, make_fused_double(n)), label);
}

QSpacePtr make_fusion(QSpacePtr first, QSpacePtr second) {
  checked_size(first, second);
  if (first->moment_count() != 1 || second->moment_count() != 1) {
    throw Error(ErrorCode::group_size_mismatch, "fusion expects two SU(n)-valued spaces");
  }
  return std::make_shared<InternalFusion>(std::make_shared<ProductSpace>(std::move(first), std::move(second)));
}

QSpacePtr make_internal_fusion(QSpacePtr space) { return std::make_shared<InternalFusion>(std::move(space)); }

QSpacePtr make_product(QSpacePtr first, QSpacePtr second) {
  return std::make_shared<ProductSpace>(std::move(first), std::move(second));
}

QSpacePtr make_space(std::string_view descriptor, int n, const RatVec* lambda) {
  if (descriptor == "class" || descriptor == "conjugacy_class") {
    if (!lambda) throw Error(ErrorCode::parse_error, "conjugacy class needs --xi");
    return make_conjugacy_class(n, *lambda);
  }
  if (descriptor == "double") return make_double(n);
  if (descriptor == "fused_double") return make_fused_double(n);
  if (descriptor.starts_with("genus:")) {
    const Rational h = parse_rational(descriptor.substr(6));
    if (!is_integer(h)) throw Error(ErrorCode::parse_error, "genus must be an integer");
    return make_genus(n, static_cast<int>(h.numerator()));
  }
  throw Error(ErrorCode::parse_error, "unknown space '" + std::string(descriptor) + "'");
}

}  // namespace qhs
