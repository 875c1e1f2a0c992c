#include "golodkit/series/series.hpp"

#include <algorithm>

#include "../ringkit/scalar_linalg.hpp"
#include "golodkit/error.hpp"

namespace golodkit {

namespace {

const IntPolynomial kT = IntPolynomial::monomial(1);
const IntPolynomial kOne{1};

IntPolynomial t_pow(unsigned k) { return IntPolynomial::monomial(k); }

}  // namespace

TruncatedSeries TruncatedSeries::from(const std::vector<std::size_t>& c) {
  TruncatedSeries ts;
  for (auto v : c) ts.coeffs.emplace_back(static_cast<unsigned long>(v));
  return ts;
}

bool TruncatedSeries::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::golod_formula: return "golod-formula";
    case Provenance::levin: return "levin";
    case Provenance::connected_sum: return "connected-sum";
    case Provenance::compressed: return "compressed";
    case Provenance::stretched: return "stretched";
    case Provenance::kustin: return "kustin";
    case Provenance::pade_reconstructed: return "pade-reconstructed";
    case Provenance::user_asserted: return "user-asserted";
  }
  return "unknown";
}

RationalSeries::RationalSeries(IntPolynomial num, IntPolynomial den, Provenance prov, std::vector<std::string> flags)
    : full_num_(num), full_den_(den), prov_(prov), flags_(std::move(flags)) {
  if (den.is_zero()) throw ValidationError("zero denominator");
  if (num.is_zero()) {
    num_ = IntPolynomial{};
    den_ = kOne;
  } else {
    const IntPolynomial g = gcd(num, den);
    num_ = exact_divide(num, g);
    den_ = exact_divide(den, g);
  }
  const mpz_class c0 = den_.coeff(0);
  if (c0 == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (c0 != 1) {
    throw ValidationError("denominator " + den_.to_string() + " does not reduce to constant term 1");
  }
}

std::string RationalSeries::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TruncatedSeries expand(const IntPolynomial& num, const IntPolynomial& den, std::size_t n) {
  if (den.coeff(0) != 1) throw ValidationError("expansion needs a denominator with constant term 1");
  TruncatedSeries ts;
  ts.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_class a = num.coeff(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0)));
    for (std::size_t j = 1; j <= top; ++j) a -= den.coeff(j) * ts.coeffs[k - j];
    ts.coeffs[k] = a;
  }
  return ts;
}

TruncatedSeries expand(const RationalSeries& rs, std::size_t n) { return expand(rs.numerator(), rs.denominator(), n); }

RationalSeries golod_series(unsigned e, const std::vector<std::size_t>& h) {
  if (e < 1) throw ValidationError("golod series needs edim >= 1");
  if (h.empty() || h[0] != 1) throw ValidationError("Koszul ranks must start with h_0 = 1");
  IntPolynomial den = kOne;
  for (std::size_t i = 1; i < h.size(); ++i) {
    den -= IntPolynomial::monomial(static_cast<unsigned>(i + 1), mpz_class(static_cast<unsigned long>(h[i])));
  }
  return RationalSeries(IntPolynomial::one_plus_t_pow(e), den, Provenance::golod_formula);
}

RationalSeries levin_quotient_series(const RationalSeries& p) {
  std::vector<std::string> flags;
  const TruncatedSeries head = expand(p, 1);
  if (head.coeffs[0] != 1) flags.push_back("input is not a Poincare series of k (constant term is not 1)");
  if (p.numerator() == kOne && p.denominator() == kOne) {
    flags.push_back("P = 1 means a regular ring; the formula assumes an Artinian Gorenstein ring");
  } else if (head.coeffs[1] == 1) {
    flags.push_back("edim 1 input: the formula needs edim >= 2 (a hypersurface socle quotient is not covered)");
  }
  const IntPolynomial& num = p.numerator();
  return RationalSeries(num, p.denominator() - t_pow(2) * num, Provenance::levin, std::move(flags));
}

RationalSeries teter_quotient_series(const RationalSeries& p, unsigned edim, unsigned socle_degree) {
  if (edim >= 2) return levin_quotient_series(p);
  if (edim == 0 || socle_degree == 0) throw ValidationError("the socle quotient of a field is zero");
  std::vector<std::string> flags{"edim 1: socle quotient k[z]/(z^" + std::to_string(socle_degree) +
                                 ") handled directly, outside the formula's hypotheses"};
  if (socle_degree == 1) return RationalSeries(kOne, kOne, Provenance::levin, std::move(flags));
  return RationalSeries(kOne, kOne - kT, Provenance::levin, std::move(flags));
}

RationalSeries connected_sum_series(const RationalSeries& ps, const RationalSeries& pt) {
  const IntPolynomial& p_s = ps.numerator();
  const IntPolynomial& p_t = pt.numerator();
  const IntPolynomial den = ps.denominator() * p_t + pt.denominator() * p_s + (t_pow(2) - kOne) * p_s * p_t;
  std::vector<std::string> flags = ps.flags();
  flags.insert(flags.end(), pt.flags().begin(), pt.flags().end());
  return RationalSeries(p_s * p_t, den, Provenance::connected_sum, std::move(flags));
}

IntPolynomial compressed_denominator(unsigned e, const IntPolynomial& pqr) {
  if (pqr.degree() != static_cast<int>(e)) {
    throw ValidationError("compressed denominator: P^Q_R has degree " + std::to_string(pqr.degree()) +
                          ", expected the edim " + std::to_string(e));
  }
  if (pqr.coeff(0) != 1) throw ValidationError("compressed denominator: P^Q_R must have constant term 1");
  for (const auto& c : pqr.coefficients()) {
    if (sgn(c) < 0) throw ValidationError("compressed denominator: P^Q_R has a negative coefficient");
  }
  return kOne - kT * (pqr - kOne) + t_pow(e + 1) * (kOne + kT);
}

RationalSeries compressed_series(unsigned e, const IntPolynomial& pqr) {
  return RationalSeries(IntPolynomial::one_plus_t_pow(e), compressed_denominator(e, pqr), Provenance::compressed);
}

RationalSeries stretched_series(unsigned e) {
  if (e < 1) throw ValidationError("stretched series needs edim >= 1");
  std::vector<std::string> flags;
  if (e < 3) flags.push_back("edim " + std::to_string(e) + " < 3: outside the stretched non-complete-intersection case");
  const IntPolynomial base = kOne - IntPolynomial::monomial(1, e) + t_pow(2);
  const IntPolynomial lift = IntPolynomial::one_plus_t_pow(e);
  return RationalSeries(lift, lift * base, Provenance::stretched, std::move(flags));
}

IntPolynomial kustin_denominator(unsigned n, unsigned c) {
  if (n < 2) throw ValidationError("kustin denominator needs n >= 2");
  if (c != 0 && !is_prime(c)) throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(c));
  const IntPolynomial lift = IntPolynomial::one_plus_t_pow(2 * n + 1);
  const IntPolynomial base = (kOne - kT).pow(2 * n + 1);
  if (c == 0 || n + 1 <= c) return lift * (base - t_pow(3));
  if (n + 2 <= 2 * c && c <= n) {
    return lift * (base * (kOne - t_pow(2 * c + 1) - t_pow(2 * c + 2)) - t_pow(3));
  }
  throw ValidationError("no denominator formula for n = " + std::to_string(n) + " in characteristic " +
                        std::to_string(c));
}

std::optional<RationalSeries> pade_reconstruct(const TruncatedSeries& ts, unsigned max_num_deg, unsigned max_den_deg) {
  const std::size_t n = ts.order();
  if (ts.coeffs.empty() || max_num_deg + max_den_deg + 1 > n) {
    throw ValidationError("pade reconstruction needs at least " + std::to_string(max_num_deg + max_den_deg + 2) +
                          " coefficients, got " + std::to_string(ts.coeffs.size()));
  }
  const Field q = Field::rationals();
  auto a = [&](long k) { return k < 0 ? mpz_class(0) : ts.coeffs[static_cast<std::size_t>(k)]; };

  for (unsigned dq = 0; dq <= max_den_deg; ++dq) {
    for (unsigned dp = 0; dp <= max_num_deg; ++dp) {
      // sum_{k=0}^{dq} d_k a_{m-k} = 0 for m = dp+1..N, d_0 = 1; unknowns d_1..d_dq.
      detail::DenseMatrix sys;
      for (std::size_t m = dp + 1; m <= n; ++m) {
        std::vector<Scalar> row(dq + 1, Scalar(q));
        for (unsigned k = 1; k <= dq; ++k) row[k - 1] = Scalar(q, a(static_cast<long>(m) - k));
        row[dq] = Scalar(q, mpz_class(-a(static_cast<long>(m))));
        sys.push_back(std::move(row));
      }
      const detail::Rref red = detail::rref(sys, dq + 1);
      if (!red.pivots.empty() && red.pivots.back() == dq) continue;  // inconsistent
      if (red.pivots.size() != dq) continue;                          // ambiguous fit
      std::vector<mpq_class> d(dq + 1);
      d[0] = 1;
      for (std::size_t r = 0; r < red.pivots.size(); ++r) d[red.pivots[r] + 1] = red.rows[r][dq].rational();
      if (std::any_of(d.begin(), d.end(), [](const mpq_class& v) { return v.get_den() != 1; })) continue;
      std::vector<mpz_class> dz;
      for (const auto& v : d) dz.push_back(v.get_num());
      const IntPolynomial den(dz);
      std::vector<mpz_class> pz(dp + 1);
      for (unsigned m = 0; m <= dp; ++m) {
        for (unsigned k = 0; k <= std::min(m, dq); ++k) pz[m] += dz[k] * a(m - k);
      }
      const IntPolynomial num(pz);
      if (expand(num, den, n) != ts) continue;
      return RationalSeries(num, den, Provenance::pade_reconstructed);
    }
  }
  return std::nullopt;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::a_below_b: return "a<=b";
    case Comparison::b_below_a: return "b<=a";
    case Comparison::incomparable: return "incomparable";
  }
  return "unknown";
}

Comparison series_compare(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  bool below = true, above = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] < b.coeffs[i]) above = false;
    if (a.coeffs[i] > b.coeffs[i]) below = false;
  }
  if (below && above) return Comparison::equal;
  if (below) return Comparison::a_below_b;
  if (above) return Comparison::b_below_a;
  return Comparison::incomparable;
}

}  // namespace golodkit
