#pragma once

// Small dense Gauss-Jordan over Scalar for ring-level questions (socles,
// annihilators). The homology module has its own sparse engines.

#include <vector>

#include "golodkit/exactmath/scalar.hpp"

namespace golodkit::detail {

using DenseMatrix = std::vector<std::vector<Scalar>>;  // row-major

struct Rref {
  DenseMatrix rows;                // nonzero rows, pivots normalized to 1
  std::vector<std::size_t> pivots; // pivot column of each row
};

Rref rref(DenseMatrix m, std::size_t ncols);

// Basis of {x : M x = 0}; one vector per free column, ascending.
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m, std::size_t ncols, Field f);

std::size_t rank(const DenseMatrix& m, std::size_t ncols);

}  // namespace golodkit::detail
