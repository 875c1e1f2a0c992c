#pragma once

// Field-dispatching front end to the sparse engines. Inputs and outputs are
// Scalar vectors; over Q the work happens fraction-free over Z.

#include <vector>

#include "golodkit/ringkit/quotient_ring.hpp"

namespace golodkit::detail {

// Basis of {c : sum c_j columns[j] = 0}, in column-index coordinates.
std::vector<SparseScalarVec> kernel_basis(Field f, const std::vector<SparseScalarVec>& columns);

// A basis of the span (echelon rows).
std::vector<SparseScalarVec> span_basis(Field f, const std::vector<SparseScalarVec>& vecs);

std::size_t vector_rank(Field f, const std::vector<SparseScalarVec>& vecs);

// Indices of candidates that extend span(base), chosen greedily in order.
std::vector<std::size_t> select_independent(Field f, const std::vector<SparseScalarVec>& base,
                                             const std::vector<SparseScalarVec>& candidates);

}  // namespace golodkit::detail
