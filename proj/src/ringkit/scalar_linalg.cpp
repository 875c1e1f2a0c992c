#include "scalar_linalg.hpp"

namespace golodkit::detail {

Rref rref(DenseMatrix m, std::size_t ncols) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Scalar inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m, std::size_t ncols, Field f) {
  const Rref r = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar(f));
    v[free] = Scalar(f, 1L);
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const DenseMatrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

}  // namespace golodkit::detail
