#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golodkit/exactmath/polynomial.hpp"
#include "golodkit/groebner/groebner.hpp"

namespace golodkit {

// Sparse coordinate vector: (index, nonzero coefficient), ascending index.
using SparseEntry = std::pair<std::uint32_t, Scalar>;
using SparseScalarVec = std::vector<SparseEntry>;

// Element of a QuotientRing in coordinates over its standard monomial basis.
struct RingElement {
  std::vector<Scalar> coords;

  bool is_zero() const;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Standard-graded Artinian quotient k[x_1..x_n]/I with I generated by
// homogeneous relations of degree >= 2. Immutable once built; every
// constructor funnels through make_ring.
class QuotientRing {
 public:
  Field field() const { return ctx_->field; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<std::string>& variables() const { return ctx_->names; }
  std::size_t nvars() const { return ctx_->names.size(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const GroebnerBasis& groebner_basis() const noexcept { return gb_; }
  const StandardBasis& standard_basis() const noexcept { return sb_; }

  // Basis index layout: degree 0 first, then degree 1, ...
  std::size_t dim() const noexcept { return basis_.size(); }
  unsigned socle_degree() const noexcept { return sb_.top_degree(); }
  const Monomial& basis_monomial(std::size_t i) const { return basis_[i]; }
  unsigned basis_degree(std::size_t i) const { return basis_[i].degree(); }
  std::size_t degree_offset(unsigned d) const { return offsets_.at(d); }
  std::size_t degree_dim(unsigned d) const;
  std::vector<std::size_t> hilbert_function() const { return sb_.hilbert_function(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  // Basis index of the variable x_v (variables are always standard).
  std::size_t variable_index(std::size_t v) const;

  // Product of basis elements i and j in coordinates.
  const SparseScalarVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  RingElement zero() const;
  RingElement one() const;
  RingElement basis_element(std::size_t i) const;
  RingElement variable(std::size_t v) const { return basis_element(variable_index(v)); }
  RingElement element(const Polynomial& f) const;
  RingElement element(const std::string& expr) const;
  Polynomial to_polynomial(const RingElement& a) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement scale(const RingElement& a, const Scalar& s) const;

  // Degree if a is nonzero and homogeneous.
  std::optional<unsigned> homogeneous_degree(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return !a.coords[0].is_zero(); }

  std::string presentation() const;

 private:
  friend QuotientRing make_ring(Field, std::vector<std::string>, std::vector<Polynomial>);

  ContextPtr ctx_;
  std::vector<Polynomial> relations_;
  GroebnerBasis gb_;
  StandardBasis sb_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> offsets_;  // offsets_[d] = first index of degree d; one past the end at the back
  std::map<Monomial, std::size_t, DeglexGreater> index_;
  std::vector<SparseScalarVec> table_;
};

// Builds and fully materializes the ring. Relations must be homogeneous of
// degree >= 2 (zero relations are ignored) and the quotient must be Artinian.
QuotientRing make_ring(Field field, std::vector<std::string> variables, std::vector<Polynomial> relations);
QuotientRing make_ring(Field field, std::vector<std::string> variables, const std::vector<std::string>& relations);

struct RingInvariants {
  unsigned edim = 0;
  unsigned dimension = 0;
  unsigned codim = 0;
  std::size_t length = 0;
  unsigned socle_degree = 0;
  unsigned loewy_length = 0;
  std::vector<std::size_t> hilbert;
  bool gorenstein = false;
  std::size_t socle_dim = 0;
};

RingInvariants invariants(const QuotientRing& r);

// Basis of ann(m), homogeneous elements listed by ascending degree.
std::vector<RingElement> socle(const QuotientRing& r);

// Basis of {b : a*b = 0}. Throws for zero or unit a.
std::vector<RingElement> annihilator(const QuotientRing& r, const RingElement& a);

// Basis of the principal ideal (a) as a subspace.
std::vector<RingElement> principal_ideal(const QuotientRing& r, const RingElement& a);

// True iff ann(a) = (b) and ann(b) = (a).
bool exact_pair_check(const QuotientRing& r, const RingElement& a, const RingElement& b);

// Rank of a family of ring elements (exact).
std::size_t span_rank(const QuotientRing& r, const std::vector<RingElement>& elems);

struct MontanoLyle {
  std::size_t e = 0;  // multiplicity (= length for Artinian graded rings)
  unsigned c = 0;     // codimension
  unsigned l = 0;     // Loewy length
  bool satisfies_2c_plus_l_minus_3 = false;
  bool satisfies_strict = false;  // e <= 2c + l - 4
};

MontanoLyle montano_lyle_check(const QuotientRing& r);

}  // namespace golodkit
