#include "qhs/gerbe_cover.hpp"

#include <algorithm>

#include "qhs/alcove.hpp"
#include "qhs/spectrum.hpp"

namespace qhs {

namespace {

bool strict_gap(const SortedSpectrum& s, int i) {
  const auto n = static_cast<int>(s.gaps.size());
  return s.gaps(((i == 0 ? n : i) - 1)) > 0.0;
}

}  // namespace

std::vector<int> cover_index_set(const Mat& a) {
  const SortedSpectrum s = sorted_spectrum(a);
  std::vector<int> out;
  for (int i = 1; i <= s.gaps.size(); ++i)
    if (strict_gap(s, i)) out.push_back(i);
  return out;
}

RatVec nu_weight(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw Error(ErrorCode::index_out_of_range, "nu_" + std::to_string(i) + " for n = " + std::to_string(n));
  RatVec nu = RatVec::Constant(n, Rational(-1, n));
  nu(i - 1) += Rational(1);
  return nu;
}

bool mu_consistency(int n) {
  const RootSystem rs(LieType{'A', n - 1});
  const AlcoveModel model = alcove_vertices(rs);
  RatVec mu = RatVec::Constant(n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    mu += nu_weight(n, i);
    const RatVec vertex = to_ambient(rs, model.vertices[static_cast<std::size_t>(i % n)]);
    if (vertex != mu) return false;
  }
  return true;
}

Eigen::VectorXcd wedge(const Mat& columns) {
  const auto n = static_cast<int>(columns.rows());
  const auto k = static_cast<int>(columns.cols());
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)] = r;
  std::vector<std::complex<double>> out;
  while (true) {
    Mat minor(k, k);
    for (int r = 0; r < k; ++r) minor.row(r) = columns.row(rows[static_cast<std::size_t>(r)]);
    out.push_back(k == 0 ? std::complex<double>(1.0) : minor.determinant());
    int pos = k - 1;
    while (pos >= 0 && rows[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++rows[static_cast<std::size_t>(pos)];
    for (int r = pos + 1; r < k; ++r) rows[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(r - 1)] + 1;
  }
  return Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

DetLine spectral_det_line(const Mat& a, int i, int j) {
  const SortedSpectrum s = sorted_spectrum(a);
  const auto n = static_cast<int>(s.gaps.size());
  if (i < 0 || j > n || i >= j) {
    throw Error(ErrorCode::index_out_of_range, "need 0 <= i < j <= " + std::to_string(n));
  }
  if (!strict_gap(s, i) || !strict_gap(s, j)) {
    throw Error(ErrorCode::not_in_cover,
                "A is outside V_" + std::to_string(i) + std::to_string(j) + ": the eigenvalue gap is not strict");
  }
  const Mat block = s.eigenvectors.middleCols(i, j - i);
  Eigen::HouseholderQR<Mat> qr(block);
  DetLine line;
  line.basis = qr.householderQ() * Mat::Identity(n, j - i);
  // Fix the QR gauge so R has a positive diagonal: orthonormal input comes back unchanged.
  const Mat r = qr.matrixQR().topLeftCorner(j - i, j - i);
  for (int c = 0; c < j - i; ++c) {
    const std::complex<double> d = r(c, c);
    if (std::abs(d) > 0.0) line.basis.col(c) *= d / std::abs(d);
  }
  line.representative = wedge(line.basis);
  return line;
}

CocycleResult cocycle_check(const Mat& a, int i, int j, int k) {
  if (!(i < j && j < k)) throw Error(ErrorCode::index_out_of_range, "cocycle needs i < j < k");
  const DetLine ij = spectral_det_line(a, i, j);
  const DetLine jk = spectral_det_line(a, j, k);
  const DetLine ik = spectral_det_line(a, i, k);
  Mat joined(ij.basis.rows(), ij.basis.cols() + jk.basis.cols());
  joined << ij.basis, jk.basis;
  const Eigen::VectorXcd w = wedge(joined);
  CocycleResult out;
  out.coefficient = ik.representative.dot(w) / ik.representative.squaredNorm();
  out.pass = std::abs(out.coefficient) > 1e-8;
  return out;
}

}  // namespace qhs
