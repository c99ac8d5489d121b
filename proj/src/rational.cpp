#include "qhs/rational.hpp"

#include <charconv>
#include <numeric>

namespace qhs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_rank: return "invalid_rank";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_a_root: return "not_a_root";
    case ErrorCode::outside_alcove: return "outside_alcove";
    case ErrorCode::invalid_level: return "invalid_level";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::mixed_levels: return "mixed_levels";
    case ErrorCode::not_special_unitary: return "not_special_unitary";
    case ErrorCode::not_tangent: return "not_tangent";
    case ErrorCode::unknown_axiom: return "unknown_axiom";
    case ErrorCode::group_size_mismatch: return "group_size_mismatch";
    case ErrorCode::grid_mismatch: return "grid_mismatch";
    case ErrorCode::off_sphere: return "off_sphere";
    case ErrorCode::not_in_level_set: return "not_in_level_set";
    case ErrorCode::not_in_cover: return "not_in_cover";
    case ErrorCode::eigensolver_failure: return "eigensolver_failure";
    case ErrorCode::degenerate_sample: return "degenerate_sample";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const std::int64_t num = parse_int(s.substr(0, slash), text);
  const std::int64_t den = parse_int(s.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

RatVec parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  RatVec v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v(i).denominator() == 1 ? std::to_string(v(i).numerator()) : to_string(v(i));
  }
  return out + ")";
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Eigen::VectorXd to_double(const RatVec& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

std::int64_t lcm_of_denominators(const RatVec& v) {
  std::int64_t l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = std::lcm(l, v(i).denominator());
  return l;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

}  // namespace qhs
