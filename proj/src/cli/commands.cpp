#include "golodkit/cli/commands.hpp"

#include "golodkit/analysis/analysis.hpp"
#include "golodkit/error.hpp"
#include "golodkit/homology/koszul.hpp"
#include "golodkit/homology/tor.hpp"
#include "golodkit/ringkit/constructions.hpp"
#include "golodkit/series/series.hpp"

namespace golodkit::cli {

using nlohmann::json;

namespace {

json exact(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json exact(const mpq_class& q) { return q.get_str(); }

json coefficients(const TruncatedSeries& ts) {
  json out = json::array();
  for (const auto& c : ts.coeffs) out.push_back(exact(c));
  return out;
}

json poly(const IntPolynomial& p) { return p.to_string(); }

json series_json(const RationalSeries& rs, unsigned order) {
  json out;
  out["numerator"] = poly(rs.numerator());
  out["denominator"] = poly(rs.denominator());
  out["full_numerator"] = poly(rs.full_numerator());
  out["full_denominator"] = poly(rs.full_denominator());
  out["provenance"] = to_string(rs.provenance());
  out["expansion"] = coefficients(expand(rs, order));
  out["flags"] = rs.flags();
  return out;
}

json graded_json(const std::vector<std::map<int, std::size_t>>& graded) {
  json out = json::array();
  for (const auto& row : graded) {
    json r = json::array();
    for (const auto& [deg, n] : row) r.push_back({deg, n});
    out.push_back(r);
  }
  return out;
}

json presentation_json(const QuotientRing& r) {
  json out;
  out["field"] = r.field().name();
  out["vars"] = r.variables();
  json rels = json::array();
  for (const auto& p : r.relations()) rels.push_back(p.to_string());
  out["relations"] = rels;
  out["text"] = r.presentation();
  return out;
}

json invariants_json(const QuotientRing& r) {
  const RingInvariants inv = invariants(r);
  json out;
  out["edim"] = inv.edim;
  out["dimension"] = inv.dimension;
  out["codim"] = inv.codim;
  out["length"] = inv.length;
  out["socle_degree"] = inv.socle_degree;
  out["loewy_length"] = inv.loewy_length;
  out["hilbert"] = inv.hilbert;
  out["gorenstein"] = inv.gorenstein;
  out["socle_dim"] = inv.socle_dim;
  return out;
}

json root_json(const IsolatedRoot& r) {
  return json{{"lo", exact(r.lo)}, {"hi", exact(r.hi)}, {"exact", r.exact()}, {"multiplicity", r.multiplicity}};
}

json estimate_json(const CurvatureEstimate& e) {
  json out;
  out["kind"] = to_string(e.kind);
  out["source"] = e.source == CurvatureSource::denominator ? "denominator" : "betti";
  out["lo"] = exact(e.lo);
  out["hi"] = exact(e.hi);
  if (e.root) out["root"] = root_json(*e.root);
  if (e.source == CurvatureSource::betti) {
    json ratios = json::array(), roots = json::array();
    for (const auto& q : e.ratios) ratios.push_back(exact(q));
    for (const auto& [lo, hi] : e.nth_roots) roots.push_back({exact(lo), exact(hi)});
    out["ratios"] = ratios;
    out["nth_root_enclosures"] = roots;
  }
  return out;
}

struct Denominator {
  std::string kind;
  IntPolynomial full;
  std::optional<RationalSeries> series;
  Provenance provenance = Provenance::user_asserted;
  bool class_formula = false;  // formula classes carry the generalized Golod assertion themselves
  json detail = json::object();
};

class Runner {
 public:
  Runner(const CommandArgs& a, const Session& s) : a_(a), s_(s), r_(*s.ring) {}

  Outcome go() {
    json result;
    const std::string& c = a_.command;
    if (c == "invariants") {
      result = invariants_cmd();
    } else if (c == "hilbert") {
      result = hilbert_cmd();
    } else if (c == "resolve") {
      result = resolve_cmd();
    } else if (c == "poincare") {
      result = poincare_cmd();
    } else if (c == "koszul") {
      result = koszul_cmd();
    } else if (c == "tor") {
      result = tor_cmd();
    } else if (c == "denominator") {
      result = denominator_cmd();
    } else if (c == "curvature") {
      result = curvature_cmd();
    } else if (c == "certify") {
      result = certify_cmd();
    } else if (c == "construct") {
      result = construct_cmd();
    } else if (c == "check") {
      result = check_cmd();
    } else {
      throw ValidationError("unknown command '" + c + "'");
    }
    Outcome out;
    out.report = envelope();
    out.report["result"] = result;
    out.report["status"] = invariant_failed_ ? "invariant-failure" : budget_ ? "budget-exceeded" : "ok";
    out.exit_code = invariant_failed_ ? kInvariant : budget_ ? kBudget : kOk;
    return out;
  }

  json envelope() const {
    json out;
    out["schema"] = kSchema;
    out["command"] = echo(a_);
    out["session"] = s_.source;
    out["ring"] = r_.presentation();
    out["ledger"] = ledger_;
    out["warnings"] = warnings_;
    return out;
  }

  static json echo(const CommandArgs& a) {
    json out;
    out["name"] = a.command;
    if (a.command == "resolve" || a.command == "poincare" || a.command == "curvature") out["module"] = a.module;
    if (a.command == "resolve") out["steps"] = a.steps;
    if (a.command == "poincare" || a.command == "curvature" || a.command == "denominator" || a.command == "check") {
      out["order"] = a.order;
    }
    if (a.command == "tor") out.update({{"left", a.left}, {"right", a.right}, {"max", a.max_i}});
    if (!a.class_kind.empty()) out["class"] = a.class_kind;
    if (!a.params.empty()) out["params"] = a.params;
    if (a.command == "certify") out["assert_generalized_golod"] = a.assert_generalized_golod;
    if (a.command == "construct") out.update({{"op", a.construct_op}, {"left", a.left}, {"right", a.right}});
    if (a.command == "check") out["lemma"] = a.lemma;
    return out;
  }

 private:
  // Resolutions used by a command are cached and each one lands in the ledger.
  const Resolution& resolution(const std::string& name, unsigned steps) {
    const std::string key = name + "#" + std::to_string(steps);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const ModulePresentation& m = s_.module(name);
    return record(key, name, resolve(m, steps));
  }

  const Resolution& record(const std::string& key, const std::string& name, Resolution res) {
    const ModulePresentation& m = s_.module(name);
    const ExactnessCertificate cert = exactness_certificate(res.prefix, m);
    json entry;
    entry["module"] = name;
    entry["steps"] = res.prefix.length();
    entry["ok"] = cert.ok;
    entry["minimal"] = cert.minimal;
    entry["composes_to_zero"] = cert.composes_to_zero;
    entry["ranks_exact"] = cert.ranks_exact;
    entry["euler_ok"] = cert.euler_ok;
    entry["window"] = "kernel generators sought in degrees <= max generator degree + socle degree " +
                      std::to_string(r_.socle_degree());
    if (cert.offending_degree) entry["offending_degree"] = *cert.offending_degree;
    if (!cert.failure.empty()) entry["failure"] = cert.failure;
    json degrees = json::array();
    for (const auto& l : cert.ledger) {
      degrees.push_back({{"degree", l.degree}, {"alternating_sum", l.alternating_sum}, {"module_dim", l.module_dim},
                         {"ok", l.ok}});
    }
    entry["euler_ledger"] = degrees;
    entry["budget_exceeded"] = res.prefix.budget_exceeded;
    ledger_.push_back(entry);
    if (!cert.ok) invariant_failed_ = true;
    if (res.prefix.budget_exceeded) {
      budget_ = true;
      warnings_.push_back("resolution of " + name + " stopped early: " + res.prefix.budget_message);
    }
    return cache_.emplace(key, std::move(res)).first->second;
  }

  TruncatedSeries betti(const std::string& name, unsigned n) {
    return TruncatedSeries::from(resolution(name, n).betti.totals());
  }

  std::string param(const std::string& key) const {
    if (auto it = a_.params.find(key); it != a_.params.end()) return it->second;
    if (a_.class_kind.empty() && s_.class_spec) {
      if (auto it = s_.class_spec->params.find(key); it != s_.class_spec->params.end()) return it->second;
    }
    return {};
  }

  unsigned uparam(const std::string& key, unsigned fallback) const {
    const std::string v = param(key);
    if (v.empty()) return fallback;
    try {
      std::size_t used = 0;
      const long x = std::stol(v, &used);
      if (used != v.size() || x < 0) throw std::invalid_argument(v);
      return static_cast<unsigned>(x);
    } catch (const std::exception&) {
      throw ValidationError("class parameter " + key + " must be a non-negative integer, got '" + v + "'");
    }
  }

  std::string class_kind() const {
    if (!a_.class_kind.empty()) return a_.class_kind;
    if (s_.class_spec) return s_.class_spec->kind;
    throw ValidationError("no denominator class: add a [class] block to the session or pass --class");
  }

  std::vector<std::size_t> koszul_ranks() {
    if (!koszul_) koszul_ = koszul_homology(r_);
    return koszul_->ranks;
  }

  Denominator denominator() {
    Denominator d;
    d.kind = class_kind();
    const unsigned e = static_cast<unsigned>(r_.nvars());
    if (d.kind == "golod") {
      const auto h = koszul_ranks();
      d.series = golod_series(e, h);
      d.full = d.series->full_denominator();
      d.provenance = Provenance::golod_formula;
      d.class_formula = true;
      d.detail["koszul_ranks"] = h;
    } else if (d.kind == "compressed") {
      IntPolynomial pqr;
      if (const std::string p = param("pqr"); !p.empty()) {
        pqr = parse_intpoly(p);
      } else {
        std::vector<mpz_class> c;
        for (auto h : koszul_ranks()) c.emplace_back(static_cast<unsigned long>(h));
        pqr = IntPolynomial(c);
        d.detail["pqr_source"] = "koszul homology ranks";
      }
      d.series = compressed_series(e, pqr);
      d.full = d.series->full_denominator();
      d.provenance = Provenance::compressed;
      d.class_formula = true;
      d.detail["pqr"] = poly(pqr);
    } else if (d.kind == "stretched") {
      d.series = stretched_series(uparam("e", e));
      d.full = d.series->full_denominator();
      d.provenance = Provenance::stretched;
      d.class_formula = true;
    } else if (d.kind == "kustin") {
      const unsigned n = uparam("n", 2);
      const unsigned c = uparam("c", r_.field().characteristic());
      d.full = kustin_denominator(n, c);
      d.provenance = Provenance::kustin;
      d.class_formula = true;
      d.detail["n"] = n;
      d.detail["c"] = c;
    } else if (d.kind == "pade") {
      const unsigned order = uparam("order", a_.order);
      const TruncatedSeries b = betti("k", order);
      const unsigned dq = order >= 1 ? (order - 1) / 2 : 0;
      const unsigned dp = order >= 1 + dq ? order - 1 - dq : 0;
      auto fit = pade_reconstruct(b, dp, dq);
      if (!fit) {
        throw ValidationError("no rational function with numerator degree <= " + std::to_string(dp) +
                              " and denominator degree <= " + std::to_string(dq) + " fits beta_0..beta_" +
                              std::to_string(order) + " of k");
      }
      d.series = *fit;
      d.full = fit->denominator();
      d.provenance = Provenance::pade_reconstructed;
      d.detail["betti"] = coefficients(b);
    } else if (d.kind == "user") {
      const std::string den = param("denominator");
      if (den.empty()) throw ValidationError("class user needs denominator = \"...\"");
      d.full = parse_intpoly(den);
      d.provenance = Provenance::user_asserted;
      if (const std::string num = param("numerator"); !num.empty()) {
        d.series = RationalSeries(parse_intpoly(num), d.full, Provenance::user_asserted);
      }
    } else {
      throw ValidationError("unknown denominator class '" + d.kind + "'");
    }
    if (d.series) {
      for (const auto& f : d.series->flags()) warnings_.push_back(f);
    }
    return d;
  }

  json denominator_json(const Denominator& d) {
    json out;
    out["class"] = d.kind;
    out["provenance"] = to_string(d.provenance);
    out["denominator"] = poly(d.full);
    out["d_at_one"] = exact(denominator_sign_check(d.full).d_at_one);
    if (d.series) {
      out["series"] = series_json(*d.series, a_.order);
      out["reduced_d_at_one"] = exact(denominator_sign_check(d.series->denominator()).d_at_one);
    }
    out["detail"] = d.detail;
    return out;
  }

  bool asserted(const Denominator& d) const {
    if (a_.assert_generalized_golod) return true;
    if (a_.class_kind.empty() && s_.class_spec && s_.class_spec->generalized_golod) {
      return *s_.class_spec->generalized_golod;
    }
    return d.class_formula;
  }

  // Curvature of a module from a Pade fit of its Betti numbers; heuristic
  // only when no fit exists or the fit is not a Poincare series.
  std::pair<json, std::optional<CurvatureEstimate>> curvature(const std::string& name, unsigned order) {
    json out;
    out["module"] = name;
    const TruncatedSeries b = betti(name, order);
    out["betti"] = coefficients(b);
    std::optional<CurvatureEstimate> est;
    if (b.coeffs.size() == static_cast<std::size_t>(order) + 1 && order >= 2) {
      const unsigned dq = (order - 1) / 2;
      const unsigned dp = order - 1 - dq;
      if (auto fit = pade_reconstruct(b, dp, dq)) {
        out["pade"] = series_json(*fit, order);
        try {
          est = curvature_from_denominator(*fit);
        } catch (const ValidationError& err) {
          warnings_.push_back(name + ": " + err.what());
        }
      } else {
        warnings_.push_back(name + ": no rational fit to order " + std::to_string(order) + "; heuristic only");
      }
    }
    if (est) out["estimate"] = estimate_json(*est);
    if (b.coeffs.size() >= 4) out["heuristic"] = estimate_json(curvature_from_betti(b));
    return {out, est};
  }

  json invariants_cmd() {
    json out = invariants_json(r_);
    out["presentation"] = presentation_json(r_);
    const MontanoLyle ml = montano_lyle_check(r_);
    out["montano_lyle"] = {{"e", ml.e}, {"c", ml.c}, {"l", ml.l}, {"e_le_2c_plus_l_minus_3", ml.satisfies_2c_plus_l_minus_3},
                           {"e_le_2c_plus_l_minus_4", ml.satisfies_strict}};
    return out;
  }

  json hilbert_cmd() {
    const auto h = r_.hilbert_function();
    std::vector<mpz_class> c;
    for (auto v : h) c.emplace_back(static_cast<unsigned long>(v));
    return json{{"hilbert", h}, {"length", r_.dim()}, {"series", IntPolynomial(c).to_string()}};
  }

  json resolve_cmd() {
    const Resolution& res = resolution(a_.module, a_.steps);
    json out;
    out["module"] = a_.module;
    out["betti"] = res.betti.totals();
    out["graded_betti"] = graded_json(res.betti.graded);
    out["steps_computed"] = res.prefix.length();
    out["budget_exceeded"] = res.prefix.budget_exceeded;
    return out;
  }

  json poincare_cmd() {
    const TruncatedSeries b = betti(a_.module, a_.order);
    json out;
    out["module"] = a_.module;
    out["coefficients"] = coefficients(b);
    if (a_.module == "k" && (s_.class_spec || !a_.class_kind.empty())) {
      const Denominator d = denominator();
      if (d.series) {
        const TruncatedSeries f = expand(*d.series, b.order());
        out["class_series"] = series_json(*d.series, static_cast<unsigned>(b.order()));
        out["class_series_matches"] = f == b;
      }
    }
    return out;
  }

  json koszul_cmd() {
    const auto h = koszul_ranks();
    long euler = 0;
    for (std::size_t i = 0; i < h.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(h[i]);
    return json{{"ranks", h}, {"graded", graded_json(koszul_->graded)}, {"euler_characteristic", euler}};
  }

  json tor_cmd() {
    if (a_.left.empty() || a_.right.empty()) throw ValidationError("tor needs --left and --right modules");
    const ModulePresentation& m = s_.module(a_.left);
    const ModulePresentation& n = s_.module(a_.right);
    TorResult t = tor(m, n, a_.max_i);
    record(a_.left + "#tor" + std::to_string(a_.max_i), a_.left, std::move(t.resolution));
    json out;
    out["left"] = a_.left;
    out["right"] = a_.right;
    out["dims"] = t.dims;
    out["graded"] = graded_json(t.graded);
    bool vanish = t.dims.size() == static_cast<std::size_t>(a_.max_i) + 1;
    for (std::size_t i = 1; i < t.dims.size(); ++i) vanish = vanish && t.dims[i] == 0;
    out["vanishes_in_range"] = vanish;
    out["range"] = "1 <= i <= " + std::to_string(t.dims.empty() ? 0 : t.dims.size() - 1) + " (computed range only)";
    return out;
  }

  json denominator_cmd() { return denominator_json(denominator()); }

  json curvature_cmd() {
    auto [m, est] = curvature(a_.module, a_.order);
    json out = m;
    if (a_.module != "k") {
      auto [k, kest] = curvature("k", a_.order);
      out["curv_k"] = k.contains("estimate") ? k["estimate"] : json(nullptr);
      if (est && kest) out["tag"] = to_string(lemma_m5_classify(*est, *kest, 0));
    }
    return out;
  }

  json certify_cmd() {
    const Denominator d = denominator();
    const Certificate c = torvanishing_certificate(d.full, d.provenance, asserted(d));
    json out = denominator_json(d);
    out["verdict"] = to_string(c.verdict);
    out["generalized_golod_asserted"] = c.generalized_golod_asserted;
    out["rationale"] = c.rationale;
    const M4Result m4 = lemma_m4_check(d.full);
    out["roots_in_open_unit_interval"] = m4.roots;
    out["at_most_one_root_in_unit_interval"] = m4.ok;
    out["d_at_one_nonpositive"] = denominator_sign_check(d.full).nonpositive;
    return out;
  }

  RingPtr named(const std::string& n) const {
    const auto it = s_.named_rings.find(n);
    if (it == s_.named_rings.end()) throw ValidationError("session has no [ring " + n + "]");
    return it->second;
  }

  json construct_cmd() {
    const std::string& op = a_.construct_op;
    json out;
    out["op"] = op;
    QuotientRing built = [&] {
      if (op == "teter") {
        const RingPtr src = a_.left.empty() ? s_.ring : named(a_.left);
        out["input_length"] = src->dim();
        return teter_quotient(*src);
      }
      if (a_.left.empty() || a_.right.empty()) throw ValidationError("construct " + op + " needs --left and --right");
      const RingPtr l = named(a_.left), r = named(a_.right);
      out["input_lengths"] = {l->dim(), r->dim()};
      if (op == "tensor") return tensor_product(*l, *r);
      if (op == "fiber") return fiber_product(*l, *r);
      if (op == "connsum") return connected_sum(*l, *r);
      throw ValidationError("construct op must be tensor, fiber, connsum or teter, got '" + op + "'");
    }();
    out["presentation"] = presentation_json(built);
    out["invariants"] = invariants_json(built);
    if (op == "fiber" || op == "connsum" || op == "tensor") {
      const std::size_t ls = out["input_lengths"][0], lt = out["input_lengths"][1];
      const std::size_t expect = op == "tensor" ? ls * lt : op == "fiber" ? ls + lt - 1 : ls + lt - 2;
      out["length_identity"] = {{"expected", expect}, {"actual", built.dim()}, {"ok", expect == built.dim()}};
      if (expect != built.dim()) invariant_failed_ = true;
    }
    return out;
  }

  json check_cmd() {
    const std::string& l = a_.lemma;
    json out;
    out["lemma"] = l;
    if (l == "m4") {
      const Denominator d = denominator();
      const M4Result m = lemma_m4_check(d.full);
      out["denominator"] = poly(d.full);
      out["provenance"] = to_string(d.provenance);
      out["roots_in_open_unit_interval"] = m.roots;
      const RootReport rep = real_roots_unit_interval(d.full);
      json roots = json::array();
      for (const auto& r : rep.roots) roots.push_back(root_json(r));
      out["roots"] = roots;
      out["ok"] = m.ok;
    } else if (l == "240601" || l == "sign") {
      const Denominator d = denominator();
      const SignCheck c = denominator_sign_check(d.full);
      out["denominator"] = poly(d.full);
      out["provenance"] = to_string(d.provenance);
      out["d_at_one"] = exact(c.d_at_one);
      out["regular"] = r_.nvars() == 0;
      out["ok"] = r_.nvars() == 0 || c.nonpositive;
    } else if (l == "m5") {
      auto [k, kest] = curvature("k", a_.order);
      out["curv_k"] = k;
      json mods = json::array();
      bool ok = true;
      for (const auto& name : s_.module_order) {
        if (name == "k") continue;
        auto [m, est] = curvature(name, a_.order);
        if (est && kest) {
          const CurvatureTag t = lemma_m5_classify(*est, *kest, 0);
          m["tag"] = to_string(t);
          ok = ok && t != CurvatureTag::violation;
        } else {
          m["tag"] = "undetermined";
        }
        mods.push_back(m);
      }
      out["modules"] = mods;
      out["ok"] = ok;
    } else if (l == "sandwich") {
      const auto h = koszul_ranks();
      const unsigned e = static_cast<unsigned>(r_.nvars());
      const TruncatedSeries b = betti("k", a_.order);
      const std::size_t h1 = h.size() > 1 ? h[1] : 0;
      const TruncatedSeries lower =
          expand(IntPolynomial::one_plus_t_pow(e), IntPolynomial{1, 0, -1}.pow(static_cast<unsigned>(h1)), b.order());
      const RationalSeries golod = golod_series(e, h);
      const TruncatedSeries upper = expand(golod, b.order());
      const Comparison lo = series_compare(lower, b), hi = series_compare(b, upper);
      out["lower"] = coefficients(lower);
      out["betti"] = coefficients(b);
      out["upper"] = coefficients(upper);
      out["lower_vs_betti"] = to_string(lo);
      out["betti_vs_upper"] = to_string(hi);
      out["golod_equality"] = hi == Comparison::equal;
      out["ok"] = (lo == Comparison::equal || lo == Comparison::a_below_b) &&
                  (hi == Comparison::equal || hi == Comparison::a_below_b);
    } else if (l == "montano-lyle") {
      const MontanoLyle ml = montano_lyle_check(r_);
      out.update({{"e", ml.e}, {"c", ml.c}, {"l", ml.l}, {"bound", 2 * ml.c + ml.l - 3},
                  {"e_le_2c_plus_l_minus_3", ml.satisfies_2c_plus_l_minus_3},
                  {"e_le_2c_plus_l_minus_4", ml.satisfies_strict}});
      out["ok"] = true;
    } else {
      throw ValidationError("check --lemma must be m4, m5, 240601, sandwich or montano-lyle, got '" + l + "'");
    }
    return out;
  }

  const CommandArgs& a_;
  const Session& s_;
  const QuotientRing& r_;
  std::map<std::string, Resolution> cache_;
  std::optional<KoszulHomology> koszul_;
  json ledger_ = json::array();
  json warnings_ = json::array();
  bool budget_ = false;
  bool invariant_failed_ = false;
};

int code_for(const std::exception& e) {
  if (dynamic_cast<const InvariantFailure*>(&e)) return kInvariant;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const ValidationError*>(&e)) return kValidation;
  return kInvariant;
}

std::string kind_for(int code) {
  switch (code) {
    case kValidation: return "validation";
    case kBudget: return "budget";
    default: return "invariant";
  }
}

}  // namespace

Outcome error_outcome(const CommandArgs& args, const std::string& source, const std::exception& e) {
  Outcome out;
  out.exit_code = code_for(e);
  out.report["schema"] = kSchema;
  out.report["command"] = Runner::echo(args);
  out.report["session"] = source;
  out.report["status"] = "error";
  out.report["error"] = {{"kind", kind_for(out.exit_code)}, {"message", e.what()}};
  out.report["ledger"] = json::array();
  out.report["warnings"] = json::array();
  return out;
}

Outcome run(const CommandArgs& args, const Session& session) {
  try {
    return Runner(args, session).go();
  } catch (const std::exception& e) {
    return error_outcome(args, session.source, e);
  }
}

namespace {

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string inline_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v)) {
        out += pad + k + ": " + inline_value(v) + "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return scalar(x); })) {
        out += pad + k + ": " + v.dump() + "\n";
      } else if (v.empty()) {
        out += pad + k + ": " + v.dump() + "\n";
      } else {
        out += pad + k + ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return scalar(x); }))) {
        out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      } else {
        out += pad + "-\n";
        render(v, indent + 2, out);
      }
    }
  } else {
    out += pad + inline_value(j) + "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace golodkit::cli
