#include "golodkit/analysis/analysis.hpp"

#include <algorithm>

#include "golodkit/error.hpp"

namespace golodkit {

namespace {

RatPolynomial quotient(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial q, r;
  a.divmod(b, q, r);
  return q;
}

RatPolynomial minus(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] -= b.coefficients()[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return p;
  return quotient(p, gcd(p, p.derivative())).monic();
}

// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RatPolynomial& p) {
    if (p.is_zero()) return;
    chain_.push_back(p);
    RatPolynomial next = p.derivative();
    while (!next.is_zero()) {
      chain_.push_back(next);
      RatPolynomial q, r;
      chain_[chain_.size() - 2].divmod(chain_.back(), q, r);
      next = -r;
    }
  }

  std::size_t variations(const mpq_class& x) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  }

  // Distinct roots in (a, b].
  std::size_t count(const mpq_class& a, const mpq_class& b) const {
    if (chain_.empty() || chain_.front().degree() <= 0) return 0;
    return variations(a) - variations(b);
  }

  const RatPolynomial& poly() const { return chain_.front(); }

 private:
  std::vector<RatPolynomial> chain_;
};

// Rational root of p inside (lo, hi], by the rational root theorem restricted
// to the interval. Only tried for moderate leading coefficients.
std::optional<mpq_class> rational_root_in(const RatPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  const IntPolynomial z = p.to_primitive_int();
  const mpz_class lead = abs(z.leading());
  if (lead > 1000000) return std::nullopt;
  const unsigned long l = lead.get_ui();
  for (unsigned long q = 1; q <= l; ++q) {
    if (l % q != 0) continue;
    mpz_class k = lo.get_num() * q / lo.get_den();  // floor for lo >= 0
    for (int step = 0; step < 3; ++step, ++k) {
      const mpq_class cand(k, q);
      if (cand > lo && cand <= hi && p.eval(cand) == 0) {
        mpq_class c = cand;
        c.canonicalize();
        return c;
      }
    }
  }
  return std::nullopt;
}

// Shrinks (lo, hi], which holds exactly one root, until done(lo, hi).
template <class Done>
void refine(const SturmChain& s, mpq_class& lo, mpq_class& hi, Done done) {
  for (;;) {
    if (s.poly().eval(hi) == 0) {
      lo = hi;
      return;
    }
    if (done(lo, hi)) return;
    const mpq_class mid = (lo + hi) / 2;
    if (s.count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

void isolate(const SturmChain& s, const mpq_class& a, const mpq_class& b, std::size_t n, const mpq_class& eps,
             std::vector<IsolatedRoot>& out) {
  if (n == 0) return;
  if (n == 1) {
    IsolatedRoot r{a, b, 1};
    refine(s, r.lo, r.hi, [&](const mpq_class& lo, const mpq_class& hi) { return hi - lo <= eps; });
    if (!r.exact()) {
      if (auto q = rational_root_in(s.poly(), r.lo, r.hi)) r.lo = r.hi = *q;
    }
    out.push_back(r);
    return;
  }
  const mpq_class mid = (a + b) / 2;
  const std::size_t left = s.count(a, mid);
  isolate(s, a, mid, left, eps, out);
  isolate(s, mid, b, n - left, eps, out);
}

mpz_class eval_at_one(const IntPolynomial& d) {
  mpz_class s = 0;
  for (const auto& c : d.coefficients()) s += c;
  return s;
}

}  // namespace

unsigned RootReport::count_with_multiplicity() const {
  unsigned n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::size_t sturm_count(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
  return SturmChain(squarefree_part(RatPolynomial(p))).count(a, b);
}

std::vector<RatPolynomial> squarefree_factors(const IntPolynomial& p) {
  std::vector<RatPolynomial> out;
  const RatPolynomial f(p);
  if (f.degree() <= 0) return out;
  const RatPolynomial g = gcd(f, f.derivative());
  RatPolynomial c = quotient(f, g);
  RatPolynomial d = minus(quotient(f.derivative(), g), c.derivative());
  while (c.degree() > 0) {
    const RatPolynomial a = gcd(c, d);
    out.push_back(a);
    c = quotient(c, a);
    d = minus(quotient(d, a), c.derivative());
  }
  return out;
}

RootReport real_roots_unit_interval(const IntPolynomial& p, const mpq_class& epsilon) {
  if (p.is_zero()) throw ValidationError("root isolation of the zero polynomial");
  if (epsilon <= 0) throw ValidationError("isolation width must be positive");
  RootReport rep;
  rep.polynomial = p;
  const SturmChain s(squarefree_part(RatPolynomial(p)));
  isolate(s, rep.from, rep.to, s.count(rep.from, rep.to), epsilon, rep.roots);

  const auto factors = squarefree_factors(p);
  for (auto& r : rep.roots) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const bool here = r.exact() ? factors[i].eval(r.lo) == 0 : SturmChain(factors[i].monic()).count(r.lo, r.hi) > 0;
      if (here) {
        r.multiplicity = static_cast<unsigned>(i + 1);
        break;
      }
    }
  }
  return rep;
}

M4Result lemma_m4_check(const IntPolynomial& d) {
  const RootReport rep = real_roots_unit_interval(d);
  M4Result out;
  for (const auto& r : rep.roots) {
    if (r.exact() && r.lo == 1) continue;  // (0,1) is open at 1
    out.roots += r.multiplicity;
  }
  out.ok = out.roots <= 1;
  return out;
}

SignCheck denominator_sign_check(const IntPolynomial& d) {
  SignCheck out;
  out.d_at_one = eval_at_one(d);
  out.nonpositive = sgn(out.d_at_one) <= 0;
  return out;
}

std::string to_string(CurvatureKind k) {
  switch (k) {
    case CurvatureKind::zero: return "zero";
    case CurvatureKind::one: return "one";
    case CurvatureKind::value: return "value";
    case CurvatureKind::heuristic_only: return "heuristic-only";
  }
  return "unknown";
}

CurvatureEstimate curvature_from_denominator(const RationalSeries& rs, const mpq_class& epsilon) {
  if (!expand(rs, 16).nonnegative()) {
    throw ValidationError("series " + rs.to_string() + " has a negative coefficient by order 16; not a Poincare series");
  }
  CurvatureEstimate est;
  est.source = CurvatureSource::denominator;
  if (rs.is_polynomial()) {
    est.kind = CurvatureKind::zero;
    return est;
  }
  const RootReport rep = real_roots_unit_interval(rs.denominator(), epsilon);
  if (rep.roots.empty()) {
    throw ValidationError("denominator " + rs.denominator().to_string() +
                          " has no root in (0,1] although the series is not a polynomial; not a Poincare series");
  }
  IsolatedRoot r = rep.roots.front();
  if (r.exact() && r.lo == 1) {
    est.kind = CurvatureKind::one;
    est.lo = est.hi = 1;
    est.root = r;
    return est;
  }
  est.kind = CurvatureKind::value;
  if (!r.exact()) {
    const SturmChain s(squarefree_part(RatPolynomial(rs.denominator())));
    refine(s, r.lo, r.hi, [&](const mpq_class& lo, const mpq_class& hi) {
      return sgn(lo) > 0 && mpq_class(1 / lo - 1 / hi) <= epsilon;
    });
  }
  est.root = r;
  est.lo = 1 / r.hi;
  est.hi = 1 / r.lo;
  return est;
}

CurvatureEstimate curvature_from_betti(const TruncatedSeries& ts) {
  if (ts.coeffs.size() < 4) throw ValidationError("curvature from Betti numbers needs at least 4 terms");
  if (!ts.nonnegative()) throw ValidationError("Betti numbers must be non-negative");
  CurvatureEstimate est;
  est.kind = CurvatureKind::heuristic_only;
  est.source = CurvatureSource::betti;
  constexpr unsigned bits = 20;
  for (std::size_t n = 0; n + 1 < ts.coeffs.size(); ++n) {
    if (sgn(ts.coeffs[n]) > 0) est.ratios.emplace_back(ts.coeffs[n + 1], ts.coeffs[n]);
  }
  for (auto& q : est.ratios) q.canonicalize();
  for (std::size_t n = 1; n < ts.coeffs.size(); ++n) {
    mpz_class scaled = ts.coeffs[n] << static_cast<mp_bitcnt_t>(bits * n);
    mpz_class r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(n));
    const mpz_class den = mpz_class(1) << bits;
    mpq_class lo(r, den), hi(r + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    est.nth_roots.emplace_back(lo, hi);
  }
  if (!est.ratios.empty()) est.lo = est.hi = est.ratios.back();
  return est;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tor_vanishing: return "tor-vanishing";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

Certificate torvanishing_certificate(const IntPolynomial& d, Provenance provenance, bool generalized_golod_asserted) {
  if (d.is_zero()) throw ValidationError("certificate for the zero polynomial");
  Certificate c;
  c.d_at_one = eval_at_one(d);
  c.provenance = provenance;
  c.generalized_golod_asserted = generalized_golod_asserted;
  const std::string where = "d(1) = " + c.d_at_one.get_str() + " for d = " + d.to_string() + " (" +
                            to_string(provenance) + ")";
  if (sgn(c.d_at_one) == 0) {
    c.verdict = Verdict::inconclusive;
    c.rationale = where + "; the common-denominator criterion needs d(1) != 0 and says nothing here";
  } else if (generalized_golod_asserted) {
    c.verdict = Verdict::tor_vanishing;
    c.rationale = where + " is nonzero; for a generalized Golod ring this gives Tor-vanishing: Tor_i(M,N) = 0 for "
                          "i >> 0 forces pd M or pd N finite (conditional on the asserted class)";
  } else {
    c.verdict = Verdict::not_applicable;
    c.rationale = where + "; generalized Golodness was not asserted, so the criterion does not apply";
  }
  return c;
}

std::string to_string(CurvatureTag t) {
  switch (t) {
    case CurvatureTag::zero: return "0";
    case CurvatureTag::one: return "1";
    case CurvatureTag::curv_k: return "curv_k";
    case CurvatureTag::violation: return "violation";
  }
  return "unknown";
}

CurvatureTag lemma_m5_classify(const CurvatureEstimate& est, const CurvatureEstimate& curv_k, const mpq_class& tol) {
  if (est.source != CurvatureSource::denominator || curv_k.source != CurvatureSource::denominator ||
      est.kind == CurvatureKind::heuristic_only || curv_k.kind == CurvatureKind::heuristic_only) {
    throw ValidationError("curvature classification needs denominator-based enclosures, not heuristic estimates");
  }
  if (sgn(tol) < 0) throw ValidationError("tolerance must be non-negative");
  const mpq_class lo = est.lo - tol, hi = est.hi + tol;
  auto holds = [&](const mpq_class& v) { return lo <= v && v <= hi; };
  if (holds(0)) return CurvatureTag::zero;
  if (holds(1)) return CurvatureTag::one;
  if (lo <= curv_k.hi && curv_k.lo <= hi) return CurvatureTag::curv_k;
  return CurvatureTag::violation;
}

}  // namespace golodkit
