#pragma once

#include "golodkit/ringkit/quotient_ring.hpp"

namespace golodkit {

// A (x)_k B: disjoint union of variables and relations.
QuotientRing tensor_product(const QuotientRing& a, const QuotientRing& b);

// S x_k T: union of relations plus every mixed product u*v.
QuotientRing fiber_product(const QuotientRing& s, const QuotientRing& t);

// S # T: the fiber product modulo sigma_S - sigma_T for the normalized socle
// generators. Both rings must be Gorenstein of length >= 3 with equal socle
// degree so the identifying relation is homogeneous.
QuotientRing connected_sum(const QuotientRing& s, const QuotientRing& t);

// R / soc R. Linear socle elements are eliminated by substitution, so the
// result keeps the degree >= 2 presentation (possibly with fewer variables).
QuotientRing teter_quotient(const QuotientRing& r);

// The unique socle basis vector of a Gorenstein ring, scaled so its first
// nonzero coordinate is 1.
RingElement normalized_socle_generator(const QuotientRing& r);

}  // namespace golodkit
