#include "golodkit/ringkit/quotient_ring.hpp"

#include <algorithm>

#include "golodkit/error.hpp"
#include "golodkit/exactmath/parser.hpp"
#include "scalar_linalg.hpp"

namespace golodkit {

bool RingElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

QuotientRing make_ring(Field field, std::vector<std::string> variables, std::vector<Polynomial> relations) {
  QuotientRing r;
  r.ctx_ = make_context(std::move(variables), field);
  for (const auto& name : r.ctx_->names) {
    if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
  }

  for (auto& rel : relations) {
    if (!(rel.field() == field)) throw ValidationError("relation over " + rel.field().name() + " in a ring over " + field.name());
    Polynomial p = embed(rel, r.ctx_);
    const Homogeneity h = homogeneous_degree(p);
    if (h.is_zero) continue;
    if (!h.degree) throw ValidationError("non-homogeneous relation: " + p.to_string());
    if (*h.degree < 2) {
      throw ValidationError("relation of degree " + std::to_string(*h.degree) + " (embedding dimension would drop): " +
                            p.to_string());
    }
    r.relations_.push_back(std::move(p));
  }

  r.gb_ = r.relations_.empty() ? GroebnerBasis(r.ctx_, MonomialOrder::degrevlex, {})
                               : buchberger(r.relations_, MonomialOrder::degrevlex);
  r.sb_ = standard_monomials(r.gb_);

  for (const auto& level : r.sb_.by_degree) {
    r.offsets_.push_back(r.basis_.size());
    r.basis_.insert(r.basis_.end(), level.begin(), level.end());
  }
  r.offsets_.push_back(r.basis_.size());
  for (std::size_t i = 0; i < r.basis_.size(); ++i) r.index_.emplace(r.basis_[i], i);

  // Structure constants: the normal form of every product of basis monomials.
  const std::size_t n = r.basis_.size();
  const unsigned top = r.sb_.top_degree();
  r.table_.assign(n * n, {});
  std::map<Monomial, SparseScalarVec, DeglexGreater> cache;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Monomial m = r.basis_[i] * r.basis_[j];
      if (m.degree() > top) continue;
      auto it = cache.find(m);
      if (it == cache.end()) {
        SparseScalarVec v;
        if (auto idx = r.index_.find(m); idx != r.index_.end()) {
          v.emplace_back(static_cast<std::uint32_t>(idx->second), Scalar(field, 1L));
        } else {
          const Polynomial nf = normal_form(Polynomial::term(r.ctx_, m, Scalar(field, 1L)), r.gb_);
          for (const auto& [mono, c] : nf.terms()) {
            auto pos = r.index_.find(mono);
            if (pos == r.index_.end()) throw InvariantFailure("normal form left the standard basis");
            v.emplace_back(static_cast<std::uint32_t>(pos->second), c);
          }
          std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
        }
        it = cache.emplace(m, std::move(v)).first;
      }
      r.table_[i * n + j] = it->second;
      r.table_[j * n + i] = it->second;
    }
  }
  return r;
}

QuotientRing make_ring(Field field, std::vector<std::string> variables, const std::vector<std::string>& relations) {
  const ContextPtr ctx = make_context(variables, field);
  std::vector<Polynomial> rels;
  rels.reserve(relations.size());
  for (const auto& text : relations) rels.push_back(parse_poly(text, ctx));
  return make_ring(field, std::move(variables), std::move(rels));
}

std::size_t QuotientRing::degree_dim(unsigned d) const {
  if (d + 1 >= offsets_.size()) return 0;
  return offsets_[d + 1] - offsets_[d];
}

std::optional<std::size_t> QuotientRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuotientRing::variable_index(std::size_t v) const {
  auto idx = index_of(Monomial::variable(nvars(), v));
  if (!idx) throw InvariantFailure("variable is not a standard monomial");
  return *idx;
}

RingElement QuotientRing::zero() const { return RingElement{std::vector<Scalar>(dim(), Scalar(field()))}; }

RingElement QuotientRing::one() const { return basis_element(0); }

RingElement QuotientRing::basis_element(std::size_t i) const {
  RingElement e = zero();
  e.coords.at(i) = Scalar(field(), 1L);
  return e;
}

RingElement QuotientRing::element(const Polynomial& f) const {
  const Polynomial nf = normal_form(embed(f, ctx_), gb_);
  RingElement e = zero();
  for (const auto& [m, c] : nf.terms()) {
    auto idx = index_of(m);
    if (!idx) throw InvariantFailure("normal form left the standard basis");
    e.coords[*idx] += c;
  }
  return e;
}

RingElement QuotientRing::element(const std::string& expr) const { return element(parse_poly(expr, ctx_)); }

Polynomial QuotientRing::to_polynomial(const RingElement& a) const {
  Polynomial p(ctx_);
  for (std::size_t i = 0; i < dim(); ++i) p.add_term(basis_[i], a.coords[i]);
  return p;
}

RingElement QuotientRing::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out = zero();
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j].is_zero()) continue;
      const Scalar ab = a.coords[i] * b.coords[j];
      for (const auto& [k, c] : product(i, j)) out.coords[k] += ab * c;
    }
  }
  return out;
}

RingElement QuotientRing::add(const RingElement& a, const RingElement& b) const {
  RingElement out = a;
  for (std::size_t i = 0; i < dim(); ++i) out.coords[i] += b.coords[i];
  return out;
}

RingElement QuotientRing::scale(const RingElement& a, const Scalar& s) const {
  RingElement out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

std::optional<unsigned> QuotientRing::homogeneous_degree(const RingElement& a) const {
  std::optional<unsigned> d;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i].is_zero()) continue;
    if (d && *d != basis_degree(i)) return std::nullopt;
    d = basis_degree(i);
  }
  return d;
}

std::string QuotientRing::presentation() const {
  std::string out = field().name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) out += (i ? "," : "") + ctx_->names[i];
  out += "]/(";
  for (std::size_t i = 0; i < relations_.size(); ++i) out += (i ? ", " : "") + relations_[i].to_string();
  return out + ")";
}

RingInvariants invariants(const QuotientRing& r) {
  RingInvariants inv;
  inv.edim = static_cast<unsigned>(r.nvars());
  inv.dimension = 0;
  inv.codim = inv.edim;
  inv.length = r.dim();
  inv.socle_degree = r.socle_degree();
  inv.loewy_length = inv.socle_degree + 1;
  inv.hilbert = r.hilbert_function();
  inv.socle_dim = socle(r).size();
  inv.gorenstein = inv.socle_dim == 1;
  return inv;
}

std::vector<RingElement> socle(const QuotientRing& r) {
  const Field f = r.field();
  std::vector<RingElement> out;
  for (unsigned d = 0; d <= r.socle_degree(); ++d) {
    const std::size_t lo = r.degree_offset(d);
    const std::size_t cols = r.degree_dim(d);
    // Rows: (variable, basis index of degree d+1); columns: basis of degree d.
    const std::size_t hi_lo = r.degree_offset(d) + cols;
    const std::size_t hi_dim = r.degree_dim(d + 1);
    detail::DenseMatrix m(r.nvars() * hi_dim, std::vector<Scalar>(cols, Scalar(f)));
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      const std::size_t xv = r.variable_index(v);
      for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [k, s] : r.product(xv, lo + c)) m[v * hi_dim + (k - hi_lo)][c] = s;
      }
    }
    for (auto& vec : detail::nullspace(m, cols, f)) {
      RingElement e = r.zero();
      for (std::size_t c = 0; c < cols; ++c) e.coords[lo + c] = vec[c];
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

detail::DenseMatrix multiplication_matrix(const QuotientRing& r, const RingElement& a) {
  const std::size_t n = r.dim();
  detail::DenseMatrix m(n, std::vector<Scalar>(n, Scalar(r.field())));
  for (std::size_t j = 0; j < n; ++j) {
    const RingElement col = r.multiply(a, r.basis_element(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords[i];
  }
  return m;
}

void require_proper(const QuotientRing& r, const RingElement& a) {
  if (a.coords.size() != r.dim()) throw ValidationError("element does not belong to this ring");
  if (a.is_zero()) throw ValidationError("element is zero");
  if (r.is_unit(a)) throw ValidationError("element is a unit");
}

detail::DenseMatrix as_rows(const std::vector<RingElement>& elems) {
  detail::DenseMatrix m;
  m.reserve(elems.size());
  for (const auto& e : elems) m.push_back(e.coords);
  return m;
}

}  // namespace

std::vector<RingElement> annihilator(const QuotientRing& r, const RingElement& a) {
  require_proper(r, a);
  std::vector<RingElement> out;
  for (auto& v : detail::nullspace(multiplication_matrix(r, a), r.dim(), r.field())) out.push_back(RingElement{std::move(v)});
  return out;
}

std::vector<RingElement> principal_ideal(const QuotientRing& r, const RingElement& a) {
  std::vector<RingElement> gens;
  for (std::size_t j = 0; j < r.dim(); ++j) gens.push_back(r.multiply(a, r.basis_element(j)));
  const detail::Rref red = detail::rref(as_rows(gens), r.dim());
  std::vector<RingElement> out;
  for (const auto& row : red.rows) out.push_back(RingElement{row});
  return out;
}

std::size_t span_rank(const QuotientRing& r, const std::vector<RingElement>& elems) {
  return detail::rank(as_rows(elems), r.dim());
}

bool exact_pair_check(const QuotientRing& r, const RingElement& a, const RingElement& b) {
  require_proper(r, a);
  require_proper(r, b);
  auto same_subspace = [&](const std::vector<RingElement>& u, const std::vector<RingElement>& v) {
    if (u.size() != v.size()) return false;
    std::vector<RingElement> both = u;
    both.insert(both.end(), v.begin(), v.end());
    return span_rank(r, both) == u.size();
  };
  return same_subspace(annihilator(r, a), principal_ideal(r, b)) &&
         same_subspace(annihilator(r, b), principal_ideal(r, a));
}

MontanoLyle montano_lyle_check(const QuotientRing& r) {
  MontanoLyle ml;
  ml.e = r.dim();
  ml.c = static_cast<unsigned>(r.nvars());
  ml.l = r.socle_degree() + 1;
  const long bound = 2L * ml.c + ml.l;
  ml.satisfies_2c_plus_l_minus_3 = static_cast<long>(ml.e) <= bound - 3;
  ml.satisfies_strict = static_cast<long>(ml.e) <= bound - 4;
  return ml;
}

}  // namespace golodkit
