#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "qhs/error.hpp"

namespace qhs {

using Rational = boost::rational<std::int64_t>;

}  // namespace qhs

namespace Eigen {

template <>
struct NumTraits<qhs::Rational> : GenericNumTraits<qhs::Rational> {
  typedef qhs::Rational Real;
  typedef qhs::Rational NonInteger;
  typedef qhs::Rational Nested;
  typedef qhs::Rational Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qhs {

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Rational coordinates of an element of t ≅ t* in the simple-root basis.
using CartanVector = RatVec;

/// Parses "p/q", "p" or "-p/q". Throws Error(parse_error) on anything else.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals.
RatVec parse_rational_list(std::string_view text);

/// Always "p/q", q > 0.
std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);

double to_double(const Rational& r);
Eigen::VectorXd to_double(const RatVec& v);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t lcm_of_denominators(const RatVec& v);

/// Exact solution of a square system by Gauss-Jordan elimination with
/// nonzero pivoting. Throws Error(dimension_mismatch) if singular.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_solve(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::dimension_mismatch, "exact_solve expects a square system");
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::dimension_mismatch, "singular system");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      b.row(pivot).swap(b.row(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    a.row(col) *= inv;
    b.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col);
      a.row(r) -= f * a.row(col);
      b.row(r) -= f * b.row(col);
    }
  }
  return b;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return exact_solve<Scalar>(a, M::Identity(a.rows(), a.rows()));
}

/// Lexicographic order on coordinates.
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace qhs
