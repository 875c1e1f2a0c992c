#include "golodkit/homology/koszul.hpp"

#include <bit>

#include "linalg.hpp"
#include "parallel.hpp"

namespace golodkit {

namespace {

// Subsets of {0..e-1} of each size, as bitmasks in increasing order.
std::vector<std::vector<std::uint32_t>> subsets_by_size(std::size_t e) {
  std::vector<std::vector<std::uint32_t>> out(e + 1);
  for (std::uint32_t mask = 0; mask < (1U << e); ++mask) out[std::popcount(mask)].push_back(mask);
  return out;
}

// Rank of d_i : K_i (ring degree d) -> K_{i-1} (ring degree d + 1).
std::size_t koszul_rank(const QuotientRing& r, const std::vector<std::vector<std::uint32_t>>& subsets, std::size_t i,
                        unsigned d) {
  if (i == 0 || d + 1 > r.socle_degree()) return 0;
  const std::size_t src_dim = r.degree_dim(d);
  const std::size_t dst_dim = r.degree_dim(d + 1);
  const std::size_t src_off = r.degree_offset(d);
  const std::size_t dst_off = r.degree_offset(d + 1);
  std::map<std::uint32_t, std::size_t> position;
  for (std::size_t k = 0; k < subsets[i - 1].size(); ++k) position[subsets[i - 1][k]] = k;

  std::vector<SparseScalarVec> cols;
  for (std::uint32_t mask : subsets[i]) {
    for (std::size_t b = 0; b < src_dim; ++b) {
      std::map<std::uint32_t, Scalar> acc;
      int sign_flip = 0;
      for (std::size_t v = 0; v < r.nvars(); ++v) {
        if (!(mask & (1U << v))) continue;
        const std::uint32_t rest = mask & ~(1U << v);
        const std::size_t row_block = position.at(rest) * dst_dim;
        for (const auto& [k, c] : r.product(r.variable_index(v), src_off + b)) {
          const auto idx = static_cast<std::uint32_t>(row_block + (k - dst_off));
          auto [it, fresh] = acc.emplace(idx, Scalar(r.field()));
          it->second += (sign_flip % 2 == 0) ? c : -c;
        }
        ++sign_flip;
      }
      SparseScalarVec col;
      for (auto& [idx, s] : acc) {
        if (!s.is_zero()) col.emplace_back(idx, std::move(s));
      }
      cols.push_back(std::move(col));
    }
  }
  return detail::vector_rank(r.field(), cols);
}

}  // namespace

KoszulHomology koszul_homology(const QuotientRing& r, Execution execution) {
  const std::size_t e = r.nvars();
  const unsigned s = r.socle_degree();
  const auto subsets = subsets_by_size(e);
  // ranks[i][d] for i = 0..e+1, ring degree d = 0..s.
  std::vector<std::vector<std::size_t>> rank(e + 2, std::vector<std::size_t>(s + 1, 0));
  const int cells = static_cast<int>((e + 1) * (s + 1));
  detail::for_each_degree(0, cells - 1, execution, [&](int cell) {
    const std::size_t i = static_cast<std::size_t>(cell) / (s + 1) + 1;
    const unsigned d = static_cast<unsigned>(cell) % (s + 1);
    if (i <= e) rank[i][d] = koszul_rank(r, subsets, i, d);
  });

  KoszulHomology h;
  h.ranks.assign(e + 1, 0);
  h.graded.resize(e + 1);
  for (std::size_t i = 0; i <= e; ++i) {
    for (unsigned d = 0; d <= s; ++d) {
      const std::size_t dim = subsets[i].size() * r.degree_dim(d);
      const std::size_t into = d == 0 ? 0 : rank[i + 1][d - 1];
      const std::size_t hom = dim - rank[i][d] - into;
      if (hom != 0) {
        h.graded[i][static_cast<int>(i + d)] = hom;
        h.ranks[i] += hom;
      }
    }
  }
  return h;
}

}  // namespace golodkit
