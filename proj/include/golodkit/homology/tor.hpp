#pragma once

#include <map>
#include <string>
#include <vector>

#include "golodkit/homology/resolution.hpp"

namespace golodkit {

struct TorResult {
  std::vector<std::size_t> dims;                  // dim Tor_i(M, N), i = 0..computed
  std::vector<std::map<int, std::size_t>> graded; // graded[i][j]
  bool budget_exceeded = false;
  std::string budget_message;
  Resolution resolution;                          // of M, kept for its ledger
};

// dim_k Tor_i(M, N) for i <= max_i, as homology of (minimal resolution of M)
// tensored with N. Over budget, only the indices whose complex was fully
// available are reported.
TorResult tor(const ModulePresentation& m, const ModulePresentation& n, unsigned max_i,
              const ResolveOptions& options = {});

}  // namespace golodkit
