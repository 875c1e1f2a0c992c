#pragma once

#include <optional>
#include <vector>

#include "golodkit/exactmath/polynomial.hpp"

namespace golodkit {

// Reduced Groebner basis of a homogeneous ideal: monic generators sorted by
// descending leading monomial; no leading monomial divides a term of another
// generator.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> gens);

  const ContextPtr& context() const noexcept { return ctx_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return lms_; }
  bool empty() const noexcept { return gens_.empty(); }

  // True iff some leading monomial divides m.
  bool in_leading_ideal(const Monomial& m) const;

 private:
  ContextPtr ctx_;
  MonomialOrder order_ = MonomialOrder::degrevlex;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> lms_;
};

struct LeadingTerm {
  Monomial monomial;
  Scalar coefficient;
};

LeadingTerm leading_term(const Polynomial& f, MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Reduced Groebner basis of the ideal generated by `relations`, which must be
// homogeneous. With `max_degree` set, only S-pairs whose lcm has degree at most
// that bound are processed (the result is then a truncated basis, exact up to
// that degree).
GroebnerBasis buchberger(const std::vector<Polynomial>& relations,
                         MonomialOrder order = MonomialOrder::degrevlex,
                         std::optional<unsigned> max_degree = std::nullopt);

// Fully reduced remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger's criterion: every S-polynomial reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);

// Monomials outside the leading-term ideal, grouped by degree. Within a degree
// monomials are listed in descending order under the basis' monomial order.
struct StandardBasis {
  std::vector<std::vector<Monomial>> by_degree;
  std::size_t total = 0;

  std::vector<std::size_t> hilbert_function() const;
  unsigned top_degree() const { return static_cast<unsigned>(by_degree.size()) - 1; }
};

// Throws ValidationError naming a variable with no pure power among the
// leading monomials when the quotient is not Artinian.
StandardBasis standard_monomials(const GroebnerBasis& gb);

}  // namespace golodkit
