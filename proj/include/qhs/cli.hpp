#pragma once

#include <string>
#include <vector>

namespace qhs::cli {

struct Outcome {
  /// 0 success, 1 failed verification, 2 usage or input error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. args excludes the program name.
Outcome dispatch(const std::vector<std::string>& args);

struct VerbInfo {
  std::string verb;
  std::string summary;
  /// Library operations the verb exercises.
  std::vector<std::string> operations;
};

const std::vector<VerbInfo>& verb_table();

}  // namespace qhs::cli
