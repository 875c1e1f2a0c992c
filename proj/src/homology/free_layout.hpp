#pragma once

// Coordinates of the graded pieces of a free module F = sum R(-a_j): in
// degree d the basis is (j, b) with deg b = d - a_j, blocks ordered by j and
// monomials in ring-basis order inside a block.

#include <optional>
#include <vector>

#include "golodkit/homology/module.hpp"

namespace golodkit::detail {

class FreeLayout {
 public:
  FreeLayout(const QuotientRing& r, std::vector<int> degrees);

  bool empty() const noexcept { return degrees_.empty(); }
  int min_gen() const noexcept { return min_gen_; }
  int max_gen() const noexcept { return max_gen_; }
  // Degrees where F is nonzero: [min_gen, max_gen + s].
  int low() const noexcept { return min_gen_; }
  int high() const noexcept { return max_gen_ + static_cast<int>(ring_->socle_degree()); }

  std::size_t dim(int d) const;
  std::uint32_t index(int d, std::uint32_t gen, std::uint32_t basis) const;
  std::pair<std::uint32_t, std::uint32_t> entry(int d, std::uint32_t idx) const;
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  SparseScalarVec coordinates(int d, const FreeVector& v) const;
  FreeVector element(int d, const SparseScalarVec& coords) const;

 private:
  struct Block {
    std::uint32_t gen;
    std::uint32_t offset;
    std::uint32_t first_basis;
    std::uint32_t size;
  };
  const std::vector<Block>& blocks(int d) const;

  const QuotientRing* ring_;
  std::vector<int> degrees_;
  int min_gen_ = 0;
  int max_gen_ = -1;
  std::vector<std::vector<Block>> by_degree_;  // index d - min_gen
  std::vector<std::vector<std::int32_t>> block_of_gen_;
};

}  // namespace golodkit::detail
