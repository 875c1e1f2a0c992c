#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "golodkit/exactmath/intpoly.hpp"

namespace golodkit {

// Power series known to order N: coefficients a_0..a_N.
struct TruncatedSeries {
  std::vector<mpz_class> coeffs;

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<mpz_class> c) : coeffs(std::move(c)) {}
  static TruncatedSeries from(const std::vector<std::size_t>& c);

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool nonnegative() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

enum class Provenance { golod_formula, levin, connected_sum, compressed, stretched, kustin, pade_reconstructed, user_asserted };

std::string to_string(Provenance p);

// p/d stored reduced with d(0) = 1. The unreduced pair produced by a formula
// is kept alongside, because statements about d_R(1) refer to it.
class RationalSeries {
 public:
  RationalSeries() = default;
  // Reduces num/den; den(0) must become 1 after clearing the gcd and sign.
  RationalSeries(IntPolynomial num, IntPolynomial den, Provenance prov, std::vector<std::string> flags = {});

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }
  const IntPolynomial& full_numerator() const noexcept { return full_num_; }
  const IntPolynomial& full_denominator() const noexcept { return full_den_; }
  Provenance provenance() const noexcept { return prov_; }
  // Warnings such as inputs outside a formula's hypotheses.
  const std::vector<std::string>& flags() const noexcept { return flags_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  std::string to_string() const;

 private:
  IntPolynomial num_{1};
  IntPolynomial den_{1};
  IntPolynomial full_num_{1};
  IntPolynomial full_den_{1};
  Provenance prov_ = Provenance::user_asserted;
  std::vector<std::string> flags_;
};

// Exact first N+1 coefficients of p/d by the recurrence d * a = p.
TruncatedSeries expand(const IntPolynomial& num, const IntPolynomial& den, std::size_t n);
TruncatedSeries expand(const RationalSeries& rs, std::size_t n);

// (1+t)^e / (1 - sum_{i>=1} h_i t^{i+1}); h are the Koszul homology ranks.
RationalSeries golod_series(unsigned e, const std::vector<std::size_t>& h);

// The series with reciprocal 1/P - t^2 (Poincare series of k over R/soc R
// for Gorenstein R). Flags inputs of edim 1 and P = 1.
RationalSeries levin_quotient_series(const RationalSeries& p);

// Series of k over R/soc R for Gorenstein R of the given edim and socle
// degree s. For edim >= 2 this is levin_quotient_series; for edim 1, where
// the formula does not apply, R/soc R = k[z]/(z^s) and the series is
// 1/(1-t) (or 1 when s = 1). The result is flagged in that case.
RationalSeries teter_quotient_series(const RationalSeries& p, unsigned edim, unsigned socle_degree);

// Reciprocal 1/PS + 1/PT + t^2 - 1 (k over a connected sum, from the series
// of the two socle quotients).
RationalSeries connected_sum_series(const RationalSeries& ps, const RationalSeries& pt);

// 1 - t(PQR - 1) + t^{e+1}(1 + t).
IntPolynomial compressed_denominator(unsigned e, const IntPolynomial& pqr);
// (1+t)^e over the compressed denominator.
RationalSeries compressed_series(unsigned e, const IntPolynomial& pqr);

// 1/(1 - et + t^2), full denominator (1+t)^e (1 - et + t^2).
RationalSeries stretched_series(unsigned e);

// The determinantal denominators; throws when c is in neither range.
IntPolynomial kustin_denominator(unsigned n, unsigned c);

// Smallest p/d (minimal deg d, then deg p) with d(0) = 1 matching every
// coefficient. Requires dp + dq + 1 <= N; ambiguous fits and non-integral
// denominators are rejected.
std::optional<RationalSeries> pade_reconstruct(const TruncatedSeries& ts, unsigned max_num_deg, unsigned max_den_deg);

enum class Comparison { equal, a_below_b, b_below_a, incomparable };

std::string to_string(Comparison c);

// Termwise comparison on the common known prefix.
Comparison series_compare(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace golodkit
