#pragma once

#include <json.hpp>

#include "qhs/alcove.hpp"
#include "qhs/gerbe_cover.hpp"
#include "qhs/holonomy.hpp"
#include "qhs/prequant.hpp"
#include "qhs/verify.hpp"

namespace qhs {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; complex matrices are row lists of [re, im] pairs.

Json to_json(const Rational& r);
Json to_json(const RatVec& v);
Json to_json(const Mat& m);
Json to_json(const PiecewiseConnection& a);
Json to_json(const VerificationReport& report);
Json to_json(const PrequantVerdict& verdict);
Json to_json(const AlcoveModel& model);
Json to_json(const LevelWeightSet& set);
Json to_json(const DetLine& line);
Json to_json(const ConvergenceStudy& study);

/// Throws Error(parse_error) naming the offending element.
Mat matrix_from_json(const Json& j);
PiecewiseConnection connection_from_json(const Json& j);
RatVec rational_vector_from_json(const Json& j);

}  // namespace qhs
