#include "golodkit/groebner/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "golodkit/error.hpp"

namespace golodkit {

GroebnerBasis::GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), order_(order), gens_(std::move(gens)) {
  lms_.reserve(gens_.size());
  for (const auto& g : gens_) lms_.push_back(leading_term(g, order_).monomial);
}

bool GroebnerBasis::in_leading_ideal(const Monomial& m) const {
  return std::any_of(lms_.begin(), lms_.end(), [&](const Monomial& lm) { return lm.divides(m); });
}

LeadingTerm leading_term(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw InvariantFailure("leading term of zero polynomial");
  auto best = f.terms().begin();
  if (order != MonomialOrder::deglex) {
    for (auto it = std::next(best); it != f.terms().end(); ++it) {
      if (compare(it->first, best->first, order) > 0) best = it;
    }
  }
  return {best->first, best->second};
}

namespace {

Polynomial make_monic(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) return f;
  return f * leading_term(f, order).coefficient.inverse();
}

// Reduces f modulo the generators, moving irreducible leading terms into the
// remainder. Generators need not be monic.
Polynomial reduce(Polynomial p, const std::vector<Polynomial>& gens, const std::vector<Monomial>& lms,
                  MonomialOrder order) {
  Polynomial rem(p.context());
  while (!p.is_zero()) {
    const LeadingTerm lt = leading_term(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!lms[i].divides(lt.monomial)) continue;
      const Scalar lc = leading_term(gens[i], order).coefficient;
      p -= gens[i].times_term(lms[i].quotient_of(lt.monomial), lt.coefficient / lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt.monomial, lt.coefficient);
      p.add_term(lt.monomial, -lt.coefficient);
    }
  }
  return rem;
}

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const LeadingTerm a = leading_term(f, order);
  const LeadingTerm b = leading_term(g, order);
  const Monomial l = a.monomial.lcm(b.monomial);
  return f.times_term(a.monomial.quotient_of(l), b.coefficient) -
         g.times_term(b.monomial.quotient_of(l), a.coefficient);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& relations, MonomialOrder order,
                         std::optional<unsigned> max_degree) {
  if (relations.empty()) return {};
  const ContextPtr ctx = relations.front().context();
  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  for (const auto& r : relations) {
    if (!(*r.context() == *ctx)) throw ValidationError("relations use different variable contexts");
    const Homogeneity h = homogeneous_degree(r);
    if (h.is_zero) continue;
    if (!h.degree) throw ValidationError("non-homogeneous relation: " + r.to_string());
    basis.push_back(make_monic(r, order));
    lms.push_back(leading_term(basis.back(), order).monomial);
  }

  // Pending pairs ordered by (lcm degree, lcm under the order, i, j): the
  // normal selection strategy, processed by ascending degree.
  auto pair_less = [order](const Pair& a, const Pair& b) {
    const int c = compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending_index;

  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lms[i].lcm(lms[k]);
      if (max_degree && l.degree() > *max_degree) continue;
      pending.insert(Pair{std::move(l), i, k});
      pending_index.emplace(i, k);
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({pr.i, pr.j});

    // Product criterion.
    if (lms[pr.i].coprime(lms[pr.j])) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (lms[k].divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial h = reduce(s_polynomial(basis[pr.i], basis[pr.j], order), basis, lms, order);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h, order));
    lms.push_back(leading_term(basis.back(), order).monomial);
    add_pairs_for(basis.size() - 1);
  }

  // Minimize: drop generators whose leading monomial is divisible by another
  // (keeping the earliest of equal leading monomials).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !lms[j].divides(lms[i])) continue;
      redundant = !(lms[i] == lms[j]) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t i : keep) {
    minimal.push_back(basis[i]);
    minimal_lms.push_back(lms[i]);
  }

  // Interreduce the tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_lms;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_lms.push_back(minimal_lms[j]);
    }
    const Polynomial& g = minimal[i];
    Polynomial tail = g;
    tail.add_term(minimal_lms[i], -leading_term(g, order).coefficient);
    Polynomial r = reduce(tail, others, other_lms, order);
    r.add_term(minimal_lms[i], Scalar(ctx->field, 1L));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(leading_term(a, order).monomial, leading_term(b, order).monomial, order) > 0;
  });
  return GroebnerBasis(ctx, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.empty()) return f;
  if (!(*f.context() == *gb.context())) throw ValidationError("variable context mismatch in normal_form");
  return reduce(f, gb.generators(), gb.leading_monomials(), gb.order());
}

bool verify_groebner(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j], gb.order()), gb).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> StandardBasis::hilbert_function() const {
  std::vector<std::size_t> h;
  h.reserve(by_degree.size());
  for (const auto& level : by_degree) h.push_back(level.size());
  return h;
}

StandardBasis standard_monomials(const GroebnerBasis& gb) {
  if (!gb.context() && gb.empty()) throw ValidationError("standard_monomials needs a variable context");
  const ContextPtr& ctx = gb.context();
  const std::size_t n = ctx->names.size();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& lm : gb.leading_monomials()) {
      if (lm.degree() == lm[v]) found = true;
    }
    if (!found) {
      throw ValidationError("quotient is not Artinian: no power of '" + ctx->names[v] +
                            "' lies in the leading-term ideal");
    }
  }

  StandardBasis sb;
  sb.by_degree.push_back({Monomial(n)});
  sb.total = 1;
  for (;;) {
    std::set<Monomial, DeglexGreater> next;
    for (const auto& m : sb.by_degree.back()) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial c = m * Monomial::variable(n, v);
        if (!gb.in_leading_ideal(c)) next.insert(std::move(c));
      }
    }
    if (next.empty()) break;
    std::vector<Monomial> level(next.begin(), next.end());
    std::sort(level.begin(), level.end(),
              [&](const Monomial& a, const Monomial& b) { return compare(a, b, gb.order()) > 0; });
    sb.total += level.size();
    sb.by_degree.push_back(std::move(level));
  }
  return sb;
}

}  // namespace golodkit
