// Acceptance run: one PASS/FAIL line per criterion, with the numbers behind it.
// Expected values come from closed forms and recurrences written out here,
// not from the library routines under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golodkit/analysis/analysis.hpp"
#include "golodkit/error.hpp"
#include "golodkit/homology/koszul.hpp"
#include "golodkit/homology/resolution.hpp"
#include "golodkit/homology/tor.hpp"
#include "golodkit/ringkit/constructions.hpp"
#include "golodkit/series/series.hpp"
#include "support/test_rings.hpp"

using namespace golodkit;
using namespace testrings;

namespace {

using Seq = std::vector<long>;

struct Report {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void info(const std::string& s) { notes.push_back(s); }
};

std::string show(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string show(const TruncatedSeries& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) os << (i ? "," : "") << s.coeffs[i].get_str();
  os << ")";
  return os.str();
}

bool same(const std::vector<std::size_t>& b, const Seq& want) {
  if (b.size() != want.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (static_cast<long>(b[i]) != want[i]) return false;
  }
  return true;
}

bool same(const std::vector<std::size_t>& b, const TruncatedSeries& s) { return TruncatedSeries::from(b) == s; }

// Linear recurrence a_n = sum c_j a_{n-j} with given initial terms.
Seq recurrence(Seq init, const Seq& c, std::size_t n) {
  while (init.size() <= n) {
    long a = 0;
    for (std::size_t j = 1; j <= c.size(); ++j) a += c[j - 1] * init[init.size() - j];
    init.push_back(a);
  }
  init.resize(n + 1);
  return init;
}

// Total Betti numbers through F_n, with the exactness certificate checked.
std::vector<std::size_t> betti(Report& r, const ModulePresentation& m, unsigned n) {
  const Resolution res = resolve(m, n);
  r.expect(!res.prefix.budget_exceeded, "resolution of " + m.label() + " within budget");
  const ExactnessCertificate cert = exactness_certificate(res.prefix, m);
  r.expect(cert.ok, "exactness certificate for " + m.label() + (cert.ok ? "" : ": " + cert.failure));
  return res.betti.totals();
}

RationalSeries pade_of(const std::vector<std::size_t>& b) {
  const unsigned order = static_cast<unsigned>(b.size() - 1);
  const unsigned dq = (order - 1) / 2;
  const auto fit = pade_reconstruct(TruncatedSeries::from(b), order - 1 - dq, dq);
  if (!fit) throw InvariantFailure("no rational fit of " + show(b));
  return *fit;
}

bool in_zero_or_one(CurvatureTag t) { return t == CurvatureTag::zero || t == CurvatureTag::one; }

// ---------------------------------------------------------------------------

void criterion1(Report& r) {
  const auto R = compressed();
  const auto b = betti(r, residue(R), 5);
  const Seq want = recurrence({1, 3}, {3, -1}, 5);
  r.info("beta(k) = " + show(b));
  r.expect(same(b, want), "beta = (1,3,8,21,55,144)");
  r.expect(same(b, expand(IntPolynomial{1}, IntPolynomial{1, -3, 1}, 5)), "beta = expand(1/(1-3t+t^2))");

  const auto h = koszul_homology(*R).ranks;
  r.info("koszul ranks = " + show(h));
  r.expect(h == std::vector<std::size_t>{1, 5, 5, 1}, "koszul homology (1,5,5,1)");

  const IntPolynomial d = compressed_denominator(3, IntPolynomial{1, 5, 5, 1});
  const IntPolynomial want_d{1, 0, -5, -5, 0, 1};
  r.info("d = " + d.to_string());
  r.expect(d == want_d, "compressed denominator 1-5t^2-5t^3+t^5");
  r.expect(IntPolynomial{1, 1}.pow(3) * IntPolynomial{1, -3, 1} == want_d, "(1+t)^3(1-3t+t^2) = 1-5t^2-5t^3+t^5");

  const Certificate c = torvanishing_certificate(d, Provenance::compressed, true);
  r.info("certify: " + to_string(c.verdict) + ", d(1) = " + c.d_at_one.get_str());
  r.expect(c.verdict == Verdict::tor_vanishing && c.d_at_one == -8, "tor-vanishing with d(1) = -8");
}

void criterion2(Report& r) {
  const auto S = ring_s();
  const auto k = residue(S);
  const auto bk = betti(r, k, 8);
  Seq want;
  for (long n = 0; n <= 8; ++n) want.push_back((1L << (n + 2)) - (n + 3));
  r.info("beta(k) = " + show(bk));
  r.expect(same(bk, want), "beta_n(k) = 2^(n+2) - (n+3)");

  const auto mz = quotient(S, {"z"}), mw = quotient(S, {"w"}), mxy = quotient(S, {"x", "y"});
  struct Pair {
    const ModulePresentation *m, *n;
  };
  const std::vector<Pair> pairs = {{&mz, &mw}, {&mz, &mxy}};
  for (const auto& p : pairs) {
    const TorResult t = tor(*p.m, *p.n, 8);
    const std::string name = "tor(" + p.m->label() + ", " + p.n->label() + ")";
    r.info(name + " = " + show(t.dims));
    r.expect(!t.budget_exceeded && t.dims.size() == 9, name + " computed through i = 8");
    bool vanish = true;
    for (std::size_t i = 1; i < t.dims.size(); ++i) vanish = vanish && t.dims[i] == 0;
    r.expect(vanish, name + " = 0 for 1 <= i <= 8");
  }

  const RationalSeries pk = pade_of(bk);
  r.info("k: Pade " + pk.to_string());
  r.expect(pk.denominator() == IntPolynomial{1, -2} * IntPolynomial{1, -1}.pow(2) && pk.numerator() == IntPolynomial{1},
           "P_k = 1/((1-2t)(1-t)^2)");
  const CurvatureEstimate ck = curvature_from_denominator(pk);

  std::map<std::string, CurvatureTag> tags;
  for (const auto* m : {&mz, &mw, &mxy}) {
    const auto b = betti(r, *m, 8);
    const RationalSeries p = pade_of(b);
    const CurvatureEstimate est = curvature_from_denominator(p);
    const CurvatureTag tag = lemma_m5_classify(est, ck, 0);
    tags[m->label()] = tag;
    r.info(m->label() + ": beta = " + show(b) + ", Pade " + p.to_string() + ", curvature in [" + est.lo.get_str() + ", " +
           est.hi.get_str() + "], tag " + to_string(tag));
    r.expect(tag != CurvatureTag::violation, "curvature of " + m->label() + " lies in {0, 1, curv k}");
  }
  const CurvatureEstimate exy = curvature_from_denominator(pade_of(betti(r, mxy, 8)));
  const CurvatureEstimate ez = curvature_from_denominator(pade_of(betti(r, mz, 8)));
  r.expect(exy.lo == 2 && exy.hi == 2, "curvature of S/(x,y) is exactly 2");
  r.expect(ez.kind == CurvatureKind::one && ez.lo == 1 && ez.hi == 1, "curvature of S/(z) is exactly 1");
  r.expect(tags[mxy.label()] == CurvatureTag::curv_k, "S/(x,y) tagged curv_k");
  r.expect(tags[mz.label()] == CurvatureTag::one, "S/(z) tagged 1");
  for (const auto& p : pairs) {
    r.expect(in_zero_or_one(tags[p.m->label()]) || in_zero_or_one(tags[p.n->label()]),
             "one of " + p.m->label() + ", " + p.n->label() + " has curvature 0 or 1");
  }
}

void criterion3(Report& r) {
  const auto R = square_of_max();
  const auto h = koszul_homology(*R).ranks;
  r.expect(h == std::vector<std::size_t>{1, 3, 2}, "koszul ranks (1,3,2), got " + show(h));
  const RationalSeries g = golod_series(2, {1, 3, 2});
  r.info("golod_series(2,(1,3,2)) = " + g.to_string());
  r.expect(g.numerator() == IntPolynomial{1} && g.denominator() == IntPolynomial{1, -2}, "reduces to 1/(1-2t)");
  const auto b = betti(r, residue(R), 10);
  r.info("beta(k) = " + show(b));
  Seq want;
  for (long n = 0; n <= 10; ++n) want.push_back(1L << n);
  r.expect(same(b, want), "beta_n = 2^n");
  r.expect(same(b, expand(g, 10)), "beta = expand(golod series)");
}

void criterion4(Report& r) {
  const auto R = ring({"x", "y"}, {"x^2", "y^2"});
  const auto bR = betti(r, residue(R), 6);
  r.expect(same(bR, Seq{1, 2, 3, 4, 5, 6, 7}), "P_R = 1/(1-t)^2 directly, got " + show(bR));
  const auto Q = shared(teter_quotient(*R));
  const auto b = betti(r, residue(Q), 10);
  r.info("teter quotient " + Q->presentation() + ", beta(k) = " + show(b));
  Seq want;
  for (long n = 0; n <= 10; ++n) want.push_back(1L << n);
  r.expect(same(b, want), "beta_n = 2^n");
  const RationalSeries lev =
      levin_quotient_series(RationalSeries(IntPolynomial{1}, IntPolynomial{1, -1}.pow(2), Provenance::user_asserted));
  r.info("levin_quotient_series(1/(1-t)^2) = " + lev.to_string());
  r.expect(lev.flags().empty(), "no hypothesis flags");
  r.expect(same(b, expand(IntPolynomial{1}, IntPolynomial{1, -2}, 10)), "beta = expand(1/(1-2t))");
  r.expect(same(b, expand(lev, 10)), "beta = expand(levin series)");
}

void criterion5(Report& r) {
  const auto S = ring({"x", "y"}, {"x^2", "y^2"});
  const auto T = ring({"z"}, {"z^3"});
  const auto C = shared(connected_sum(*S, *T));
  const auto explicit_ring = ring({"x", "y", "z"}, {"x^2", "y^2", "x*z", "y*z", "x*y-z^2"});
  r.info("connected sum " + C->presentation());
  r.info("lengths " + std::to_string(S->dim()) + " + " + std::to_string(T->dim()) + " - 2 = " + std::to_string(C->dim()));
  r.expect(S->dim() == 4 && T->dim() == 3 && C->dim() == 5, "length identity 4+3-2 = 5");
  r.expect(C->hilbert_function() == explicit_ring->hilbert_function(), "same Hilbert function as the explicit ring");

  const auto b = betti(r, residue(C), 8);
  const auto b2 = betti(r, residue(explicit_ring), 8);
  r.info("beta(k) = " + show(b));
  r.expect(same(b, recurrence({1, 3}, {3, -1}, 8)), "beta = expand(1/(1-3t+t^2))");
  r.expect(b == b2, "explicit presentation gives the same Betti numbers");

  const RationalSeries ps(IntPolynomial{1}, IntPolynomial{1, -1}.pow(2), Provenance::user_asserted);
  const RationalSeries pt(IntPolynomial{1}, IntPolynomial{1, -1}, Provenance::user_asserted);
  r.expect(same(betti(r, residue(S), 8), expand(ps, 8)) && same(betti(r, residue(T), 8), expand(pt, 8)),
           "input series 1/(1-t)^2 and 1/(1-t) match direct resolutions");

  // T has edim 1, where the quotient formula does not hold; the socle
  // quotient series comes from the edim-1 branch and is checked directly.
  const RationalSeries qs = levin_quotient_series(ps);
  const RationalSeries qt = teter_quotient_series(pt, 1, T->socle_degree());
  const auto bq = betti(r, residue(shared(teter_quotient(*T))), 8);
  r.expect(same(bq, expand(qt, 8)), "socle quotient series of T matches k[z]/(z^2) directly");
  const RationalSeries cs = connected_sum_series(qs, qt);
  r.info("connected_sum_series = " + cs.to_string());
  r.expect(same(b, expand(cs, 8)), "beta = expand(connected_sum_series)");

  const RationalSeries literal = levin_quotient_series(pt);
  const RationalSeries literal_cs = connected_sum_series(qs, literal);
  r.info("note: the quotient formula applied literally to T gives " + literal.to_string() + " (flagged: " +
         (literal.flags().empty() ? std::string("no") : literal.flags().front()) + "), and the sum formula then gives " +
         literal_cs.to_string() + " = " + show(expand(literal_cs, 8)) + ", not the computed series");
}

void criterion6(Report& r) {
  const auto R = gasharov_peeva();
  const auto hf = R->hilbert_function();
  r.info("Hilbert function " + show(hf));
  r.expect(hf == std::vector<std::size_t>{1, 5, 5, 1}, "Hilbert function (1,5,5,1)");
  const auto b = betti(r, residue(R), 4);
  r.info("beta(k) = " + show(b));
  r.expect(same(b, Seq{1, 5, 20, 76, 285}), "beta = (1,5,20,76,285)");
  r.expect(same(b, recurrence({1, 5, 20}, {5, -5, 1}, 4)), "beta follows a_n = 5a_{n-1} - 5a_{n-2} + a_{n-3}");
  r.expect(same(b, expand(IntPolynomial{1}, IntPolynomial{1, -5, 5, -1}, 4)), "beta = expand(1/(1-5t+5t^2-t^3))");
  std::vector<mpz_class> hc(hf.begin(), hf.end());
  r.expect(IntPolynomial(hc).reflect() == IntPolynomial{1, -5, 5, -1}, "1-5t+5t^2-t^3 = H(-t)");

  const RingElement x1 = R->element("x1");
  r.expect(exact_pair_check(*R, x1, x1), "x1, x1 is an exact pair");

  const IntPolynomial d = IntPolynomial{1, 1}.pow(5) * IntPolynomial{1, -5, 5, -1};
  const Certificate c = torvanishing_certificate(d, Provenance::user_asserted, true);
  r.info("certify: " + to_string(c.verdict) + ", d(1) = " + c.d_at_one.get_str());
  r.expect(c.verdict == Verdict::inconclusive && c.d_at_one == 0, "inconclusive with d(1) = 0");
}

void criterion7(Report& r) {
  const auto R = stretched();
  const auto b = betti(r, residue(R), 4);
  r.info("beta(k) = " + show(b));
  r.expect(same(b, Seq{1, 3, 8, 21, 55}), "beta = (1,3,8,21,55)");
  r.expect(same(b, expand(IntPolynomial{1}, IntPolynomial{1, -3, 1}, 4)), "beta = expand(1/(1-3t+t^2))");
  const RationalSeries s = stretched_series(3);
  r.expect(same(b, expand(s, 4)), "beta = expand(stretched series)");
  const mpz_class d1 = s.full_denominator().eval(mpz_class(1));
  r.info("d_R(1) = " + d1.get_str());
  r.expect(d1 == 8 * (2 - 3), "d_R(1) = 2^3(2-3) = -8");
  const Certificate c = torvanishing_certificate(s.full_denominator(), Provenance::stretched, true);
  r.expect(c.verdict == Verdict::tor_vanishing, "tor-vanishing");
}

void criterion8(Report& r) {
  const RootReport rep = real_roots_unit_interval(IntPolynomial{1, 0, -1, -1});
  r.expect(rep.roots.size() == 1 && rep.count_with_multiplicity() == 1, "exactly one simple root in (0,1]");
  if (!rep.roots.empty()) {
    const IsolatedRoot& x = rep.roots.front();
    const mpq_class target(754878, 1000000);
    r.info("root of 1-t^2-t^3 in (" + x.lo.get_str() + ", " + x.hi.get_str() + "], width " +
           mpq_class(x.hi - x.lo).get_str() + " ~ " + std::to_string(x.lo.get_d()) + "..." + std::to_string(x.hi.get_d()));
    r.expect(x.hi - x.lo <= default_epsilon(), "width <= 2^-20");
    r.expect(x.lo < target && target <= x.hi, "interval contains 0.754878");
    // Sign change on the interval, evaluated by hand.
    auto p = [](const mpq_class& t) { return mpq_class(1 - t * t - t * t * t); };
    r.expect(sgn(p(x.lo)) > 0 && sgn(p(x.hi)) <= 0, "p changes sign on the interval");
  }

  struct Named {
    std::string name;
    IntPolynomial d;
  };
  const std::vector<Named> ds = {
      {"compressed", compressed_denominator(3, IntPolynomial{1, 5, 5, 1})},
      {"example S", IntPolynomial{1, -2} * IntPolynomial{1, -1}.pow(2)},
      {"golod (x,y)^2", golod_series(2, {1, 3, 2}).full_denominator()},
      {"levin", levin_quotient_series(RationalSeries(IntPolynomial{1}, IntPolynomial{1, -1}.pow(2),
                                                     Provenance::user_asserted))
                    .full_denominator()},
      {"connected sum", IntPolynomial{1, -3, 1}},
      {"gasharov-peeva", IntPolynomial{1, 1}.pow(5) * IntPolynomial{1, -5, 5, -1}},
      {"stretched e=3", stretched_series(3).full_denominator()},
  };
  for (const auto& [name, d] : ds) {
    const M4Result m = lemma_m4_check(d);
    const SignCheck s = denominator_sign_check(d);
    r.info(name + ": d = " + d.to_string() + ", roots in (0,1): " + std::to_string(m.roots) + ", d(1) = " +
           s.d_at_one.get_str());
    r.expect(m.ok, name + ": at most one root in (0,1)");
    r.expect(s.nonpositive, name + ": d(1) <= 0");
  }
}

void criterion9(Report& r) {
  for (unsigned c : {0u, 2u}) {
    const IntPolynomial d = kustin_denominator(2, c);
    const std::string name = "kustin(2," + std::to_string(c) + ")";
    const mpz_class v = d.eval(mpz_class(1));
    r.info(name + " = " + d.to_string() + ", value at 1 = " + v.get_str());
    r.expect(v == -32, name + "(1) = -32");
    r.expect(lemma_m4_check(d).ok, name + " passes the root check");
    r.expect(torvanishing_certificate(d, Provenance::kustin, true).verdict == Verdict::tor_vanishing,
             name + " certificate tor-vanishing");
  }
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> c(std::min(a.size(), b.size()), 0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) c[n] += a[j] * b[n - j];
  }
  return c;
}

void criterion10(Report& r) {
  const auto s = ring_s();
  const auto c = compressed();
  const auto q = square_of_max();

  // Tor symmetry.
  struct Triple {
    RingPtr r;
    std::vector<std::string> m, n;
  };
  const std::vector<Triple> triples = {
      {s, {"z"}, {"w"}}, {s, {"z"}, {"x", "y"}}, {s, {"w", "z"}, {"x"}},
      {c, {"x"}, {"y"}}, {c, {"z"}, {"x", "y"}}, {q, {"x"}, {"y"}},
  };
  int sym = 0;
  for (const auto& t : triples) {
    const auto m = quotient(t.r, t.m), n = quotient(t.r, t.n);
    const auto a = tor(m, n, 4).dims, b = tor(n, m, 4).dims;
    r.expect(a == b, "tor symmetry for " + m.label() + ", " + n.label() + ": " + show(a) + " vs " + show(b));
    sym += a == b;
  }
  r.info("tor symmetry through i = 4: " + std::to_string(sym) + "/" + std::to_string(triples.size()));

  // beta_i(M) = dim Tor_i(M, k).
  int tk = 0;
  const std::vector<ModulePresentation> mods = {quotient(s, {"z"}), quotient(s, {"x", "y"}), quotient(s, {"w", "z"}),
                                                quotient(c, {"x"}), residue(q)};
  for (const auto& m : mods) {
    const auto b = betti(r, m, 6);
    const auto t = tor(m, residue(m.ring_ptr()), 6).dims;
    r.expect(b == t, "beta = dim Tor(M,k) for " + m.label());
    tk += b == t;
  }
  r.info("beta = dim Tor(M,k) through i = 6: " + std::to_string(tk) + "/" + std::to_string(mods.size()));

  // Kunneth on S = A (x) B (x) C.
  const auto A = ring({"w"}, {"w^2"});
  const auto B = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  const auto C = ring({"z"}, {"z^2"});
  const auto T = shared(tensor_product(tensor_product(*A, *B), *C));
  r.expect(T->hilbert_function() == s->hilbert_function(), "A(x)B(x)C has the Hilbert function of S");
  const auto bA = betti(r, residue(A), 8), bB = betti(r, residue(B), 8), bC = betti(r, residue(C), 8);
  const auto bT = betti(r, residue(T), 8);
  const auto conv = convolve(convolve(bA, bB), bC);
  r.expect(bT == conv, "beta(k over A(x)B(x)C) = convolution " + show(conv) + ", got " + show(bT));
  r.expect(betti(r, quotient(T, {"x", "y"}), 8) == bB, "beta(S/(x,y)) = beta_B(k)");
  r.expect(betti(r, quotient(T, {"z"}), 8) == bC, "beta(S/(z)) = beta_C(k)");
  r.info("kunneth: " + show(bA) + " * " + show(bB) + " * " + show(bC) + " = " + show(bT));

  // Golod sandwich to order 8.
  struct Named {
    std::string name;
    RingPtr r;
    bool golod;
  };
  for (const auto& [name, R, golod] : std::vector<Named>{{"(x,y)^2", q, true},
                                                        {"compressed", c, false},
                                                        {"S", s, false},
                                                        {"stretched", stretched(), false},
                                                        {"gasharov-peeva", gasharov_peeva(), false},
                                                        {"Q[x,y]/(x^2,y^2)", ring({"x", "y"}, {"x^2", "y^2"}), false}}) {
    const auto h = koszul_homology(*R).ranks;
    const unsigned e = static_cast<unsigned>(R->nvars());
    const unsigned order = e >= 5 ? 6 : 8;
    const TruncatedSeries b = TruncatedSeries::from(betti(r, residue(R), order));
    const TruncatedSeries lower =
        expand(IntPolynomial::one_plus_t_pow(e), IntPolynomial{1, 0, -1}.pow(static_cast<unsigned>(h[1])), order);
    const TruncatedSeries upper = expand(golod_series(e, h), order);
    const Comparison lo = series_compare(lower, b), hi = series_compare(b, upper);
    auto le = [](Comparison x) { return x == Comparison::equal || x == Comparison::a_below_b; };
    r.info("sandwich " + name + " to order " + std::to_string(order) + ": " + show(lower) + " <= " + show(b) +
           " <= " + show(upper));
    r.expect(le(lo) && le(hi), "sandwich holds for " + name);
    if (golod) {
      r.expect(hi == Comparison::equal, name + " attains the upper bound");
      r.expect(lo == Comparison::a_below_b, name + " is strictly above the lower bound");
    }
  }

  // Pade round trips.
  std::mt19937 rng(7331);
  std::uniform_int_distribution<int> deg(0, 3), coef(-6, 6);
  auto rnd = [&](bool unit) {
    std::vector<mpz_class> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = coef(rng);
    if (unit) v[0] = 1;
    if (v.back() == 0) v.back() = 1;
    return IntPolynomial(v);
  };
  int pade_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const IntPolynomial p = rnd(false), d = rnd(true);
    const RationalSeries rs(p, d, Provenance::user_asserted);
    const auto back = pade_reconstruct(expand(rs, 12), 4, 4);
    // Cross-multiplied equality with the unreduced input.
    const bool ok = back && back->numerator() * d == p * back->denominator();
    pade_ok += ok;
    r.expect(ok, "pade round trip " + p.to_string() + " / " + d.to_string());
  }
  r.info("pade round trips: " + std::to_string(pade_ok) + "/100");

  // Sturm counts against sign changes on a fine grid.
  std::mt19937 rng2(4242);
  std::uniform_int_distribution<int> deg2(1, 8), coef2(-20, 20);
  int sturm_ok = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<mpz_class> v(static_cast<std::size_t>(deg2(rng2)) + 1);
    for (auto& x : v) x = coef2(rng2);
    if (v.back() == 0) v.back() = 1;
    const IntPolynomial p(v);
    const RatPolynomial f(p);
    RatPolynomial sqf, rem;
    f.divmod(gcd(f, f.derivative()), sqf, rem);
    std::size_t n = 0;
    int last = sqf.sign_at(0);
    for (long j = 1; j <= 4096; ++j) {
      const int sg = sqf.sign_at(mpq_class(j, 4096));
      if (sg == 0 || (last != 0 && sg != last)) ++n;
      last = sg;
    }
    const std::size_t st = sturm_count(p, 0, 1);
    const bool ok = st == n && real_roots_unit_interval(p).roots.size() == st;
    sturm_ok += ok;
    r.expect(ok, "sturm vs grid for " + p.to_string());
  }
  r.info("sturm vs grid: " + std::to_string(sturm_ok) + "/200");

  // Mutations of a valid resolution must be caught.
  const auto m = residue(c);
  const Resolution res = resolve(m, 3);
  r.expect(exactness_certificate(res.prefix, m).ok, "unmutated certificate ok");
  int caught = 0;
  {
    ResolutionPrefix bad = res.prefix;
    bad.steps[2].differential[0].front().basis = 0;
    caught += !exactness_certificate(bad, m).minimal;
  }
  {
    ResolutionPrefix bad = res.prefix;
    bad.steps.back().degrees.pop_back();
    bad.steps.back().differential.pop_back();
    caught += !exactness_certificate(bad, m).euler_ok;
  }
  {
    ResolutionPrefix bad = res.prefix;
    bad.last_kernel_dims.begin()->second += 1;
    caught += !exactness_certificate(bad, m).euler_ok;
  }
  {
    ResolutionPrefix bad = res.prefix;
    bool done = false;
    for (auto& col : bad.steps[2].differential) {
      for (auto& e : col) {
        if (done || multiply(m.ring(), e.basis, bad.steps[1].differential[e.gen]).empty()) continue;
        e.coeff = e.coeff + Scalar(e.coeff.field(), 1L);
        done = true;
      }
    }
    caught += done && !exactness_certificate(bad, m).composes_to_zero;
  }
  r.info("mutations caught: " + std::to_string(caught) + "/4");
  r.expect(caught == 4, "every mutation caught");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Report&)> run;
  };
  const std::vector<Criterion> all = {
      {1, 60, criterion1}, {2, 180, criterion2}, {3, 10, criterion3}, {4, 10, criterion4},  {5, 60, criterion5},
      {6, 300, criterion6}, {7, 30, criterion7}, {8, 5, criterion8},  {9, 1, criterion9}, {10, 120, criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.expect(secs <= c.limit_s, "runtime within " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    char line[128];
    std::snprintf(line, sizeof line, "criterion %d: %s (%.2f s, limit %.0f s)", c.id, r.ok ? "PASS" : "FAIL", secs,
                  c.limit_s);
    std::cout << line << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    failed += !r.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
