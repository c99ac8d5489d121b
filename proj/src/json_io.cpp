#include "qhs/json_io.hpp"

namespace qhs {

namespace {

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PiecewiseConnection& a) {
  Json out = Json::array();
  for (const auto& x : a.samples) out.push_back(to_json(x));
  return out;
}

Json to_json(const VerificationReport& r) {
  return Json{{"axiom", to_string(r.axiom)},
              {"samples", r.samples},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"resampled", r.resampled}};
}

Json to_json(const PrequantVerdict& v) {
  Json out{{"answer", v.answer}, {"level", v.level}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (!v.violated.empty()) out["violated"] = v.violated;
  return out;
}

Json to_json(const AlcoveModel& model) {
  Json vertices = Json::array();
  for (const auto& mu : model.vertices) vertices.push_back(to_json(mu));
  return Json{{"type", model.type.name()}, {"vertices", std::move(vertices)}};
}

Json to_json(const LevelWeightSet& set) {
  Json weights = Json::array();
  for (const auto& mu : set.weights) weights.push_back(to_json(mu));
  return Json{{"type", set.type.name()}, {"level", set.level}, {"count", set.weights.size()}, {"weights", std::move(weights)}};
}

Json to_json(const DetLine& line) {
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < line.basis.cols(); ++c) {
    Json v = Json::array();
    for (Eigen::Index r = 0; r < line.basis.rows(); ++r) v.push_back(complex_pair(line.basis(r, c)));
    basis.push_back(std::move(v));
  }
  Json rep = Json::array();
  for (const auto& z : line.representative) rep.push_back(complex_pair(z));
  return Json{{"subspace_basis", std::move(basis)}, {"representative", std::move(rep)}};
}

Json to_json(const ConvergenceStudy& study) {
  return Json{{"steps", study.steps}, {"residuals", study.residuals}, {"order", study.order}};
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::parse_error, "matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorCode::parse_error, "matrix row " + std::to_string(r) + " has the wrong length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw Error(ErrorCode::parse_error,
                    "matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not a [re, im] pair");
      }
      m(r, c) = {entry[0].get<double>(), entry[1].get<double>()};
    }
  }
  return m;
}

PiecewiseConnection connection_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::parse_error, "connection must be a nonempty list of matrices");
  PiecewiseConnection a;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      a.samples.push_back(matrix_from_json(j[k]));
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, "connection sample " + std::to_string(k) + ": " + e.what());
    }
    if (a.samples.back().rows() != a.samples.front().rows() || a.samples.back().cols() != a.samples.front().cols()) {
      throw Error(ErrorCode::parse_error, "connection sample " + std::to_string(k) + " differs in size");
    }
  }
  return a;
}

RatVec rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "expected an array of \"p/q\" strings");
  RatVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k].is_string()) {
      v(static_cast<Eigen::Index>(k)) = parse_rational(j[k].get<std::string>());
    } else if (j[k].is_number_integer()) {
      v(static_cast<Eigen::Index>(k)) = Rational(j[k].get<std::int64_t>());
    } else {
      throw Error(ErrorCode::parse_error, "element " + std::to_string(k) + " is not a rational");
    }
  }
  return v;
}

}  // namespace qhs
