#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "golodkit/exactmath/intpoly.hpp"
#include "golodkit/series/series.hpp"

namespace golodkit {

inline mpq_class default_epsilon() { return mpq_class(1, 1u << 20); }

// A distinct real root in (lo, hi]; lo == hi when the root is known exactly.
struct IsolatedRoot {
  mpq_class lo, hi;
  unsigned multiplicity = 1;
  bool exact() const { return lo == hi; }
};

struct RootReport {
  IntPolynomial polynomial;
  mpq_class from = 0, to = 1;  // interval of interest (from, to]
  std::vector<IsolatedRoot> roots;  // increasing

  unsigned count_with_multiplicity() const;
};

// Number of distinct real roots of p in (a, b] (Sturm's theorem on the
// square-free part).
std::size_t sturm_count(const IntPolynomial& p, const mpq_class& a, const mpq_class& b);

// Square-free factors f_1, f_2, ... with p = c * prod f_i^i (Yun).
std::vector<RatPolynomial> squarefree_factors(const IntPolynomial& p);

RootReport real_roots_unit_interval(const IntPolynomial& p, const mpq_class& epsilon = default_epsilon());

struct M4Result {
  bool ok = false;
  unsigned roots = 0;  // in (0,1), with multiplicity
};
// At most one root in (0,1) counting multiplicity.
M4Result lemma_m4_check(const IntPolynomial& d);

struct SignCheck {
  mpz_class d_at_one;
  bool nonpositive = false;
};
SignCheck denominator_sign_check(const IntPolynomial& d);

enum class CurvatureKind { zero, one, value, heuristic_only };
enum class CurvatureSource { denominator, betti };
std::string to_string(CurvatureKind k);

struct CurvatureEstimate {
  CurvatureKind kind = CurvatureKind::heuristic_only;
  CurvatureSource source = CurvatureSource::denominator;
  // Enclosure of the curvature (exact for zero and one).
  mpq_class lo = 0, hi = 0;
  // Denominator path: the dominant root of the reduced denominator.
  std::optional<IsolatedRoot> root;
  // Betti path: beta_{n+1}/beta_n and enclosures of beta_n^{1/n}.
  std::vector<mpq_class> ratios;
  std::vector<std::pair<mpq_class, mpq_class>> nth_roots;
};

CurvatureEstimate curvature_from_denominator(const RationalSeries& rs, const mpq_class& epsilon = default_epsilon());
CurvatureEstimate curvature_from_betti(const TruncatedSeries& ts);

enum class Verdict { tor_vanishing, inconclusive, not_applicable };
std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::not_applicable;
  mpz_class d_at_one;
  Provenance provenance = Provenance::user_asserted;
  bool generalized_golod_asserted = false;
  std::string rationale;
};

// d(1) = 0 is inconclusive whatever is asserted; otherwise the verdict needs
// the generalized Golod assertion.
Certificate torvanishing_certificate(const IntPolynomial& d, Provenance provenance, bool generalized_golod_asserted);

enum class CurvatureTag { zero, one, curv_k, violation };
std::string to_string(CurvatureTag t);

// Which of {0, 1, curv k} the estimate matches, comparing enclosures widened
// by tol. Heuristic estimates are refused.
CurvatureTag lemma_m5_classify(const CurvatureEstimate& est, const CurvatureEstimate& curv_k, const mpq_class& tol);

}  // namespace golodkit
