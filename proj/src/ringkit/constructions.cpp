#include "golodkit/ringkit/constructions.hpp"

#include <algorithm>

#include "golodkit/error.hpp"
#include "scalar_linalg.hpp"

namespace golodkit {

namespace {

std::vector<std::string> joined_names(const QuotientRing& a, const QuotientRing& b) {
  if (!(a.field() == b.field())) throw ValidationError("rings over different fields: " + a.field().name() + " vs " + b.field().name());
  std::vector<std::string> names = a.variables();
  for (const auto& n : b.variables()) {
    if (std::find(names.begin(), names.end(), n) != names.end()) throw ValidationError("variable name collision: '" + n + "'");
    names.push_back(n);
  }
  return names;
}

std::vector<Polynomial> joined_relations(const QuotientRing& a, const QuotientRing& b, const ContextPtr& ctx) {
  std::vector<Polynomial> rels;
  for (const auto& r : a.relations()) rels.push_back(embed(r, ctx));
  for (const auto& r : b.relations()) rels.push_back(embed(r, ctx));
  return rels;
}

std::vector<Polynomial> mixed_products(const QuotientRing& s, const QuotientRing& t, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  const std::size_t ns = s.nvars();
  for (std::size_t u = 0; u < ns; ++u) {
    for (std::size_t v = 0; v < t.nvars(); ++v) {
      out.push_back(Polynomial::variable(ctx, u) * Polynomial::variable(ctx, ns + v));
    }
  }
  return out;
}

// f with x_v replaced by images[v]; images live in `target`.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const ContextPtr& target) {
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v] != 0) term = term * images[v].pow(m[v]);
    }
    out += term;
  }
  return out;
}

}  // namespace

QuotientRing tensor_product(const QuotientRing& a, const QuotientRing& b) {
  std::vector<std::string> names = joined_names(a, b);
  const ContextPtr ctx = make_context(names, a.field());
  return make_ring(a.field(), std::move(names), joined_relations(a, b, ctx));
}

QuotientRing fiber_product(const QuotientRing& s, const QuotientRing& t) {
  if (s.nvars() == 0 || t.nvars() == 0) throw ValidationError("fiber product needs two rings with at least one variable");
  std::vector<std::string> names = joined_names(s, t);
  const ContextPtr ctx = make_context(names, s.field());
  std::vector<Polynomial> rels = joined_relations(s, t, ctx);
  for (auto& p : mixed_products(s, t, ctx)) rels.push_back(std::move(p));
  return make_ring(s.field(), std::move(names), std::move(rels));
}

RingElement normalized_socle_generator(const QuotientRing& r) {
  const auto soc = socle(r);
  if (soc.size() != 1) throw ValidationError("ring is not Gorenstein (socle dimension " + std::to_string(soc.size()) + ")");
  const auto& coords = soc.front().coords;
  auto first = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
  return r.scale(soc.front(), first->inverse());
}

QuotientRing connected_sum(const QuotientRing& s, const QuotientRing& t) {
  const RingElement sigma_s = normalized_socle_generator(s);
  const RingElement sigma_t = normalized_socle_generator(t);
  if (s.dim() < 3 || t.dim() < 3) throw ValidationError("connected sum needs rings of length at least three");
  if (s.socle_degree() != t.socle_degree()) {
    throw ValidationError("connected sum needs equal socle degrees (got " + std::to_string(s.socle_degree()) + " and " +
                          std::to_string(t.socle_degree()) + ")");
  }
  std::vector<std::string> names = joined_names(s, t);
  const ContextPtr ctx = make_context(names, s.field());
  std::vector<Polynomial> rels = joined_relations(s, t, ctx);
  for (auto& p : mixed_products(s, t, ctx)) rels.push_back(std::move(p));
  rels.push_back(embed(s.to_polynomial(sigma_s), ctx) - embed(t.to_polynomial(sigma_t), ctx));
  return make_ring(s.field(), std::move(names), std::move(rels));
}

QuotientRing teter_quotient(const QuotientRing& r) {
  if (r.dim() <= 1) throw ValidationError("ring has length 1; its socle quotient would be zero");
  const Field f = r.field();
  const std::size_t n = r.nvars();
  const auto soc = socle(r);

  // Linear socle forms, in variable coordinates.
  detail::DenseMatrix linear;
  std::vector<Polynomial> higher;
  for (const auto& e : soc) {
    if (r.homogeneous_degree(e) == 1U) {
      std::vector<Scalar> row(n, Scalar(f));
      for (std::size_t v = 0; v < n; ++v) row[v] = e.coords[r.variable_index(v)];
      linear.push_back(std::move(row));
    } else {
      higher.push_back(r.to_polynomial(e));
    }
  }
  const detail::Rref red = detail::rref(linear, n);
  std::vector<bool> eliminated(n, false);
  for (std::size_t p : red.pivots) eliminated[p] = true;

  std::vector<std::string> kept;
  std::vector<std::size_t> kept_index(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (eliminated[v]) continue;
    kept_index[v] = kept.size();
    kept.push_back(r.variables()[v]);
  }
  const ContextPtr target = make_context(kept, f);

  // x_pivot = -(sum over free columns of row[free] * x_free).
  std::vector<Polynomial> images(n, Polynomial(target));
  for (std::size_t v = 0; v < n; ++v) {
    if (!eliminated[v]) images[v] = Polynomial::variable(target, kept_index[v]);
  }
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    Polynomial img(target);
    for (std::size_t v = 0; v < n; ++v) {
      if (eliminated[v] || red.rows[i][v].is_zero()) continue;
      img -= Polynomial::variable(target, kept_index[v]) * red.rows[i][v];
    }
    images[red.pivots[i]] = std::move(img);
  }

  std::vector<Polynomial> rels;
  for (const auto& rel : r.relations()) rels.push_back(substitute(rel, images, target));
  for (const auto& h : higher) rels.push_back(substitute(h, images, target));
  return make_ring(f, std::move(kept), std::move(rels));
}

}  // namespace golodkit
