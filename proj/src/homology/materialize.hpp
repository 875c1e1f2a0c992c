#pragma once

// Explicit graded pieces of a finitely presented module M = F_0 / U: for
// each degree a basis of M_d (free coordinates outside the pivots of U_d)
// and the action of ring basis monomials.

#include <map>
#include <vector>

#include "free_layout.hpp"

namespace golodkit::detail {

class MaterializedModule {
 public:
  explicit MaterializedModule(const ModulePresentation& m);

  const ModulePresentation& presentation() const noexcept { return *m_; }
  std::size_t dim(int d) const;
  int low() const noexcept { return layout_.low(); }
  int high() const noexcept { return layout_.high(); }
  // Dimension of the relation submodule U in degree d.
  std::size_t relation_dim(int d) const;
  // Basis vectors of U_d in free coordinates.
  const std::vector<SparseScalarVec>& relation_basis(int d) const;

  // Coordinates in M_{d + deg b} of b * (basis element i of M_d).
  const SparseScalarVec& act(std::size_t basis, int d, std::size_t i) const;

 private:
  struct Piece {
    std::vector<SparseScalarVec> relations;   // basis of U_d
    std::vector<std::vector<Scalar>> rref;    // reduced rows of U_d, dense
    std::vector<std::size_t> pivots;
    std::vector<std::uint32_t> free_coords;   // M_d basis as free coordinates
    std::vector<std::int64_t> position;       // free coordinate -> M_d index, -1 on pivots
  };
  SparseScalarVec reduce(int d, const SparseScalarVec& v) const;
  const Piece& piece(int d) const;

  const ModulePresentation* m_;
  FreeLayout layout_;
  std::vector<Piece> pieces_;  // index d - low()
  // act_[d - low()][b * dim + i]
  std::vector<std::vector<SparseScalarVec>> act_;
};

}  // namespace golodkit::detail
