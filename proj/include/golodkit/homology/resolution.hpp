#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golodkit/homology/module.hpp"

namespace golodkit {

enum class Execution { serial, parallel };

// Column cap for any single per-degree matrix. GOLODKIT_MAX_MATRIX overrides
// the default of 20000.
std::size_t default_matrix_cap();

struct ResolveOptions {
  std::size_t max_columns = default_matrix_cap();
  Execution execution = Execution::parallel;
};

// F_i with its differential F_i -> F_{i-1}: differential[j] is the image of
// the j-th generator (empty for F_0).
struct ResolutionStep {
  std::vector<int> degrees;
  std::vector<FreeVector> differential;
};

struct ResolutionPrefix {
  ModulePresentation module;
  std::vector<ResolutionStep> steps;
  // dim (ker d_n)_d for the last computed step n.
  std::map<int, std::size_t> last_kernel_dims;
  bool budget_exceeded = false;
  std::string budget_message;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct BettiTable {
  // graded[i][j] = beta_{i,j}.
  std::vector<std::map<int, std::size_t>> graded;

  std::vector<std::size_t> totals() const;
  std::size_t range() const { return graded.empty() ? 0 : graded.size() - 1; }
};

BettiTable betti_table(const ResolutionPrefix& p);

struct Resolution {
  ResolutionPrefix prefix;
  BettiTable betti;
};

// Minimal graded free resolution of M up to F_steps. Running over budget
// returns the steps completed so far with budget_exceeded set.
Resolution resolve(const ModulePresentation& m, unsigned steps, const ResolveOptions& options = {});

struct LedgerEntry {
  int degree = 0;
  long alternating_sum = 0;  // sum (-1)^i dim(F_i)_d - (-1)^n dim(ker d_n)_d
  std::size_t module_dim = 0;
  bool ok = false;
};

struct ExactnessCertificate {
  bool ok = false;
  bool minimal = false;
  bool composes_to_zero = false;
  bool ranks_exact = false;
  bool euler_ok = false;
  std::optional<int> offending_degree;
  std::string failure;
  std::vector<LedgerEntry> ledger;
};

// Re-derives the resolution's guarantees from the stored data alone:
// minimality, d o d = 0, exactness at every position (by ranks, per degree)
// and the Euler ledger against dim M_d.
ExactnessCertificate exactness_certificate(const ResolutionPrefix& prefix, const ModulePresentation& m);

}  // namespace golodkit
