#include "free_layout.hpp"

#include <algorithm>

#include "golodkit/error.hpp"

namespace golodkit::detail {

FreeLayout::FreeLayout(const QuotientRing& r, std::vector<int> degrees) : ring_(&r), degrees_(std::move(degrees)) {
  if (degrees_.empty()) return;
  min_gen_ = *std::min_element(degrees_.begin(), degrees_.end());
  max_gen_ = *std::max_element(degrees_.begin(), degrees_.end());
  const int s = static_cast<int>(r.socle_degree());
  const int span = max_gen_ + s - min_gen_ + 1;
  by_degree_.resize(span);
  block_of_gen_.assign(span, std::vector<std::int32_t>(degrees_.size(), -1));
  for (int k = 0; k < span; ++k) {
    const int d = min_gen_ + k;
    std::uint32_t offset = 0;
    for (std::uint32_t j = 0; j < degrees_.size(); ++j) {
      const int rd = d - degrees_[j];
      if (rd < 0 || rd > s) continue;
      const auto size = static_cast<std::uint32_t>(r.degree_dim(static_cast<unsigned>(rd)));
      if (size == 0) continue;
      block_of_gen_[k][j] = static_cast<std::int32_t>(by_degree_[k].size());
      by_degree_[k].push_back(
          Block{j, offset, static_cast<std::uint32_t>(r.degree_offset(static_cast<unsigned>(rd))), size});
      offset += size;
    }
  }
}

const std::vector<FreeLayout::Block>& FreeLayout::blocks(int d) const {
  static const std::vector<Block> none;
  if (empty() || d < low() || d > high()) return none;
  return by_degree_[d - min_gen_];
}

std::size_t FreeLayout::dim(int d) const {
  const auto& b = blocks(d);
  return b.empty() ? 0 : b.back().offset + b.back().size;
}

std::uint32_t FreeLayout::index(int d, std::uint32_t gen, std::uint32_t basis) const {
  if (empty() || d < low() || d > high()) throw InvariantFailure("free module coordinate out of range");
  const std::int32_t k = block_of_gen_[d - min_gen_][gen];
  if (k < 0) throw InvariantFailure("free module coordinate out of range");
  const Block& b = by_degree_[d - min_gen_][k];
  if (basis < b.first_basis || basis >= b.first_basis + b.size) throw InvariantFailure("inhomogeneous free module element");
  return b.offset + (basis - b.first_basis);
}

std::pair<std::uint32_t, std::uint32_t> FreeLayout::entry(int d, std::uint32_t idx) const {
  const auto& bl = blocks(d);
  auto it = std::upper_bound(bl.begin(), bl.end(), idx, [](std::uint32_t v, const Block& b) { return v < b.offset; });
  --it;
  return {it->gen, it->first_basis + (idx - it->offset)};
}

SparseScalarVec FreeLayout::coordinates(int d, const FreeVector& v) const {
  SparseScalarVec out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(index(d, e.gen, e.basis), e.coeff);
  std::sort(out.begin(), out.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  return out;
}

FreeVector FreeLayout::element(int d, const SparseScalarVec& coords) const {
  FreeVector out;
  out.reserve(coords.size());
  for (const auto& [i, c] : coords) {
    const auto [g, b] = entry(d, i);
    out.push_back(FreeEntry{g, b, c});
  }
  return out;
}

}  // namespace golodkit::detail
