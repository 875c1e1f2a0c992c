#pragma once

#include <map>
#include <vector>

#include "golodkit/homology/resolution.hpp"

namespace golodkit {

struct KoszulHomology {
  std::vector<std::size_t> ranks;                 // h_i, i = 0..edim
  std::vector<std::map<int, std::size_t>> graded; // graded[i][j]: internal degree j
};

// Homology of the Koszul complex on the variables of R, by exact ranks of the
// differentials on each graded piece.
KoszulHomology koszul_homology(const QuotientRing& r, Execution execution = Execution::parallel);

}  // namespace golodkit
