#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golodkit/homology/module.hpp"

namespace golodkit::cli {

// [class] block: which denominator formula applies to the session ring, and
// whether the user asserts that the ring is generalized Golod.
struct ClassSpec {
  std::string kind;  // golod | compressed | stretched | kustin | pade | user
  std::optional<bool> generalized_golod;
  std::map<std::string, std::string> params;
  int line = 0;
};

struct ConstructSpec {
  std::string op;  // tensor | fiber | connsum | teter
  std::string left, right;
  int line = 0;
};

struct Session {
  std::string source;  // path or label, echoed in reports
  Field field;
  RingPtr ring;
  std::map<std::string, RingPtr> named_rings;
  std::optional<ConstructSpec> construct;
  // Includes the implicit modules k (residue field) and R (free of rank 1).
  std::map<std::string, ModulePresentation> modules;
  std::vector<std::string> module_order;  // declaration order, k and R first
  std::optional<ClassSpec> class_spec;

  const ModulePresentation& module(const std::string& name) const;
};

// Parses and validates a session; errors carry "source:line:column".
Session parse_session(const std::string& text, const std::string& source = "<session>");
Session load_session(const std::string& path);

}  // namespace golodkit::cli
