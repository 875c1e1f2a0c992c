#pragma once

// Rings shared by the unit and acceptance tests.

#include <memory>
#include <string>
#include <vector>

#include "golodkit/homology/module.hpp"
#include "golodkit/ringkit/constructions.hpp"

namespace testrings {

using golodkit::Field;
using golodkit::QuotientRing;
using golodkit::RingPtr;

inline RingPtr ring(std::vector<std::string> vars, const std::vector<std::string>& rels,
                    Field f = Field::rationals()) {
  return std::make_shared<const QuotientRing>(golodkit::make_ring(f, std::move(vars), rels));
}

inline RingPtr shared(QuotientRing r) { return std::make_shared<const QuotientRing>(std::move(r)); }

// Q[x,y]/(x,y)^2
inline RingPtr square_of_max(Field f = Field::rationals()) { return ring({"x", "y"}, {"x^2", "x*y", "y^2"}, f); }

// The compressed Gorenstein ring of socle degree 3 and length 8.
inline RingPtr compressed(Field f = Field::rationals()) {
  return ring({"x", "y", "z"}, {"x*z", "z^2+x*y", "y^2*z", "x^2", "y^3"}, f);
}

// S = Q[w,x,y,z]/(w^2, x^2, xy, y^2, z^2).
inline RingPtr ring_s(Field f = Field::rationals()) {
  return ring({"w", "x", "y", "z"}, {"w^2", "x^2", "x*y", "y^2", "z^2"}, f);
}

inline RingPtr gasharov_peeva(Field f = Field::rationals()) {
  return ring({"x1", "x2", "x3", "x4", "x5"},
              {"2*x1*x3 + x2*x3", "x1*x4 + x2*x4", "x3^2 - x2*x5 + 2*x1*x5", "x4^2 - x2*x5 + x1*x5", "x1^2",
               "x2^2", "x3*x4", "x3*x5", "x4*x5", "x5^2"},
              f);
}

inline RingPtr stretched(Field f = Field::rationals()) {
  return ring({"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2"}, f);
}

inline golodkit::ModulePresentation residue(const RingPtr& r) {
  return golodkit::ModulePresentation::residue_field(r);
}

inline golodkit::ModulePresentation quotient(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<golodkit::RingElement> elems;
  std::string label = "R/(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    elems.push_back(r->element(gens[i]));
    label += (i ? "," : "") + gens[i];
  }
  return golodkit::ModulePresentation::quotient_by_ideal(r, elems, label + ")");
}

}  // namespace testrings
