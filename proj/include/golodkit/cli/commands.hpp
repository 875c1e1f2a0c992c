#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "golodkit/cli/session.hpp"

namespace golodkit::cli {

inline constexpr const char* kSchema = "golodkit/1";

enum ExitCode { kOk = 0, kValidation = 1, kBudget = 2, kInvariant = 3 };

struct CommandArgs {
  std::string command;  // invariants | hilbert | resolve | poincare | koszul | tor | denominator | curvature |
                        // certify | construct | check
  std::string module = "k";
  std::string left, right;
  unsigned steps = 8;
  unsigned order = 8;
  unsigned max_i = 8;
  std::string class_kind;                     // overrides the session [class]
  std::map<std::string, std::string> params;  // class parameters: pqr, n, c, denominator, numerator
  bool assert_generalized_golod = false;
  std::string construct_op;
  std::string lemma;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kOk;
};

// Runs one command. Library errors are turned into an error report with the
// matching exit code; nothing is thrown.
Outcome run(const CommandArgs& args, const Session& session);

// Error report for failures before a session exists (e.g. parse errors).
Outcome error_outcome(const CommandArgs& args, const std::string& source, const std::exception& e);

std::string render_text(const nlohmann::json& report);

}  // namespace golodkit::cli
