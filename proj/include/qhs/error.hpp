#pragma once

#include <stdexcept>
#include <string>

namespace qhs {

/// Reason a precondition was rejected. Stable names are used in CLI and JSON output.
enum class ErrorCode {
  invalid_rank,
  dimension_mismatch,
  not_a_root,
  outside_alcove,
  invalid_level,
  index_out_of_range,
  mixed_levels,
  not_special_unitary,
  not_tangent,
  unknown_axiom,
  group_size_mismatch,
  grid_mismatch,
  off_sphere,
  not_in_level_set,
  not_in_cover,
  eigensolver_failure,
  degenerate_sample,
  parse_error,
};

const char* to_string(ErrorCode code);

class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qhs
