#include "qhs/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace qhs {

namespace {

bool vec_less(const CartanVector& a, const CartanVector& b) { return lex_less(a, b); }

struct VecOrder {
  bool operator()(const CartanVector& a, const CartanVector& b) const { return vec_less(a, b); }
};

Rational coefficient_sum(const CartanVector& v) {
  Rational s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i);
  return s;
}

void require_rank(const RootSystem& rs, const CartanVector& v) {
  if (v.size() != rs.rank()) {
    throw Error(ErrorCode::dimension_mismatch,
                "vector of length " + std::to_string(v.size()) + " for rank " +
                    std::to_string(rs.rank()));
  }
}

void link(Eigen::MatrixXi& a, int i, int j) { a(i, j) = a(j, i) = -1; }

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::parse_error, "malformed Lie type '" + std::string(text) + "'");
  LieType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::parse_error, "malformed Lie type '" + std::string(text) + "'");
  }
  t.rank = std::stoi(std::string(digits));
  if (std::string_view("ABCDEFG").find(t.series) == std::string_view::npos) {
    throw Error(ErrorCode::parse_error, "unknown series in '" + std::string(text) + "'");
  }
  return t;
}

std::string LieType::name() const { return std::string(1, series) + std::to_string(rank); }

void validate(const LieType& type) {
  const int r = type.rank;
  bool ok = false;
  switch (type.series) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  if (!ok) throw Error(ErrorCode::invalid_rank, "no simple Lie type " + type.name());
}

Eigen::MatrixXi cartan_matrix(const LieType& type) {
  validate(type);
  const int n = type.rank;
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
  switch (type.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 2, 3);
      link(a, 1, 3);
      for (int i = 3; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a(2, 1) = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      link(a, 0, 1);
      a(0, 1) = -3;  // alpha_1 short
      break;
  }
  return a;
}

RootSystem::RootSystem(LieType type) : type_(type), cartan_(qhs::cartan_matrix(type)) {
  const int n = type_.rank;

  // Symmetrize: d_i A_ij = d_j A_ji, then rescale so the longest root has d = 1.
  half_norms_.assign(static_cast<std::size_t>(n), Rational(0));
  half_norms_[0] = Rational(1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (half_norms_[static_cast<std::size_t>(i)] == Rational(0)) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan_(i, j) == 0 || half_norms_[static_cast<std::size_t>(j)] != Rational(0)) continue;
        half_norms_[static_cast<std::size_t>(j)] =
            half_norms_[static_cast<std::size_t>(i)] * Rational(cartan_(i, j), cartan_(j, i));
        changed = true;
      }
    }
  }
  const Rational longest = *std::max_element(half_norms_.begin(), half_norms_.end());
  for (auto& d : half_norms_) d /= longest;

  gram_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_(i, j) = half_norms_[static_cast<std::size_t>(i)] * Rational(cartan_(i, j));

  // Height-by-height closure with root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, where p is the length of the downward alpha_i-string.
  std::set<CartanVector, VecOrder> known;
  std::vector<CartanVector> layer;
  for (int i = 0; i < n; ++i) {
    CartanVector e = CartanVector::Zero(n);
    e(i) = Rational(1);
    known.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<CartanVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (CartanVector down = beta;;) {
          down(i) -= Rational(1);
          if (!known.count(down)) break;
          ++p;
        }
        Rational pairing(0);
        for (int j = 0; j < n; ++j) pairing += Rational(cartan_(i, j)) * beta(j);
        if (Rational(p) - pairing > Rational(0)) {
          CartanVector up = beta;
          up(i) += Rational(1);
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  positive_roots_.assign(known.begin(), known.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const auto& a, const auto& b) {
    const Rational ha = coefficient_sum(a), hb = coefficient_sum(b);
    if (ha != hb) return ha < hb;
    return vec_less(a, b);
  });

  highest_root_ = positive_roots_.back();
  lowest_root_ = -highest_root_;

  // Rows of (A^T)^{-1} are the fundamental weights in the simple-root basis.
  RatMat at(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = Rational(cartan_(j, i));
  const RatMat w = exact_inverse<Rational>(at);
  for (int i = 0; i < n; ++i) fundamental_weights_.push_back(w.row(i).transpose());

  // Highest root is long, so its coroot coefficients are c_i * d_i.
  Rational coroot_height(0);
  for (int i = 0; i < n; ++i) {
    marks_.push_back(static_cast<int>(highest_root_(i).numerator()));
    coroot_height += highest_root_(i) * half_norms_[static_cast<std::size_t>(i)];
  }
  dual_coxeter_ = 1 + static_cast<int>(boost::rational_cast<std::int64_t>(coroot_height));
}

CartanVector RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorCode::index_out_of_range, "simple root index " + std::to_string(i));
  CartanVector e = CartanVector::Zero(rank());
  e(i) = Rational(1);
  return e;
}

std::vector<CartanVector> RootSystem::all_roots() const {
  std::vector<CartanVector> roots;
  roots.reserve(2 * positive_roots_.size());
  for (auto it = positive_roots_.rbegin(); it != positive_roots_.rend(); ++it) roots.push_back(-*it);
  roots.insert(roots.end(), positive_roots_.begin(), positive_roots_.end());
  return roots;
}

RootSystem build_root_system(const LieType& type) { return RootSystem(type); }

Rational inner_product(const RootSystem& rs, const CartanVector& x, const CartanVector& y) {
  require_rank(rs, x);
  require_rank(rs, y);
  return x.dot(rs.gram() * y);
}

Rational coroot_pairing(const RootSystem& rs, const CartanVector& mu, int i) {
  require_rank(rs, mu);
  return rs.gram().row(i).dot(mu) / rs.half_norm(i);
}

bool is_root(const RootSystem& rs, const CartanVector& v) {
  if (v.size() != rs.rank()) return false;
  const auto& pos = rs.positive_roots();
  const CartanVector neg = -v;
  return std::find(pos.begin(), pos.end(), v) != pos.end() ||
         std::find(pos.begin(), pos.end(), neg) != pos.end();
}

int height(const RootSystem& rs, const CartanVector& root) {
  require_rank(rs, root);
  if (!is_root(rs, root)) throw Error(ErrorCode::not_a_root, to_string(root) + " is not a root of " + rs.type().name());
  return static_cast<int>(boost::rational_cast<std::int64_t>(coefficient_sum(root)));
}

CartanVector reflect(const RootSystem& rs, const CartanVector& v, int i) {
  return v - coroot_pairing(rs, v, i) * rs.simple_root(i);
}

RatVec weight_coordinates(const RootSystem& rs, const CartanVector& mu) {
  require_rank(rs, mu);
  RatVec out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out(i) = coroot_pairing(rs, mu, i);
  return out;
}

RatVec to_ambient(const RootSystem& rs, const CartanVector& v) {
  if (rs.type().series != 'A') throw Error(ErrorCode::dimension_mismatch, "ambient coordinates exist for A-series only");
  require_rank(rs, v);
  const int n = rs.rank() + 1;
  RatVec x(n);
  for (int k = 0; k < n; ++k) {
    const Rational cur = k < rs.rank() ? v(k) : Rational(0);
    const Rational prev = k > 0 ? v(k - 1) : Rational(0);
    x(k) = cur - prev;
  }
  return x;
}

CartanVector from_ambient(const RootSystem& rs, const RatVec& x) {
  if (rs.type().series != 'A') throw Error(ErrorCode::dimension_mismatch, "ambient coordinates exist for A-series only");
  if (x.size() != rs.rank() + 1) {
    throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(rs.rank() + 1) + " ambient coordinates");
  }
  if (x.sum() != Rational(0)) throw Error(ErrorCode::dimension_mismatch, "ambient coordinates must sum to zero");
  CartanVector c(rs.rank());
  Rational partial(0);
  for (int k = 0; k < rs.rank(); ++k) {
    partial += x(k);
    c(k) = partial;
  }
  return c;
}

}  // namespace qhs
