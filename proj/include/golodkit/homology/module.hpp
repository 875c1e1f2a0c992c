#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "golodkit/ringkit/quotient_ring.hpp"

namespace golodkit {

using RingPtr = std::shared_ptr<const QuotientRing>;

// One coordinate of an element of a graded free module: generator `gen`
// times the ring basis monomial `basis`.
struct FreeEntry {
  std::uint32_t gen = 0;
  std::uint32_t basis = 0;
  Scalar coeff;

  friend bool operator==(const FreeEntry&, const FreeEntry&) = default;
};

// Sparse element of a graded free module, sorted by (gen, basis).
using FreeVector = std::vector<FreeEntry>;

// Graded module given by generators of fixed degrees and a relation matrix
// whose columns are elements of the free cover. Presentations must be
// minimal on generators: an entry that is a unit is rejected.
class ModulePresentation {
 public:
  // R/J for J generated by homogeneous non-unit elements.
  static ModulePresentation quotient_by_ideal(RingPtr ring, const std::vector<RingElement>& gens,
                                              std::string label = {});
  // k = R/m.
  static ModulePresentation residue_field(RingPtr ring);
  // R itself (free of rank one).
  static ModulePresentation free_module(RingPtr ring);
  // columns[c][g] is the entry in row g (generator) and column c (relation).
  static ModulePresentation from_matrix(RingPtr ring, std::vector<int> degrees,
                                        const std::vector<std::vector<RingElement>>& columns, std::string label = {});

  const QuotientRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<int>& generator_degrees() const noexcept { return degrees_; }
  const std::vector<FreeVector>& relations() const noexcept { return relations_; }
  const std::vector<int>& relation_degrees() const noexcept { return relation_degrees_; }
  const std::string& label() const noexcept { return label_; }

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<FreeVector> relations_;
  std::vector<int> relation_degrees_;
  std::string label_;
};

// Degree of a homogeneous free-module element with the given generator degrees.
int free_degree(const QuotientRing& r, const std::vector<int>& degrees, const FreeVector& v);

// b * v for a ring basis monomial b.
FreeVector multiply(const QuotientRing& r, std::size_t basis, const FreeVector& v);

// Hilbert function of the module: degree -> dim_k M_d (only nonzero degrees).
std::map<int, std::size_t> module_hilbert(const ModulePresentation& m);

}  // namespace golodkit
