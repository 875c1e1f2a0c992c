#include "golodkit/homology/tor.hpp"

#include <algorithm>

#include "golodkit/error.hpp"
#include "linalg.hpp"
#include "materialize.hpp"
#include "parallel.hpp"

namespace golodkit {

namespace {

// Coordinates of (F (x) N)_D: blocks e_j (x) N_{D - a_j}, in generator order.
struct TensorLayout {
  std::vector<std::size_t> offsets;  // per generator
  std::size_t dim = 0;

  TensorLayout(const std::vector<int>& degrees, const detail::MaterializedModule& n, int degree) {
    for (int a : degrees) {
      offsets.push_back(dim);
      dim += n.dim(degree - a);
    }
  }
};

std::size_t tensor_rank(const QuotientRing& r, const ResolutionStep& step, const std::vector<int>& target_degrees,
                        const detail::MaterializedModule& n, int degree) {
  const TensorLayout dst(target_degrees, n, degree);
  std::vector<SparseScalarVec> cols;
  for (std::size_t j = 0; j < step.degrees.size(); ++j) {
    const int nd = degree - step.degrees[j];
    for (std::size_t k = 0; k < n.dim(nd); ++k) {
      std::map<std::uint32_t, Scalar> acc;
      for (const auto& e : step.differential[j]) {
        const int source = nd;
        for (const auto& [idx, c] : n.act(e.basis, source, k)) {
          const auto pos = static_cast<std::uint32_t>(dst.offsets[e.gen] + idx);
          auto [it, fresh] = acc.emplace(pos, Scalar(r.field()));
          it->second += e.coeff * c;
        }
      }
      SparseScalarVec col;
      for (auto& [pos, s] : acc) {
        if (!s.is_zero()) col.emplace_back(pos, std::move(s));
      }
      cols.push_back(std::move(col));
    }
  }
  return detail::vector_rank(r.field(), cols);
}

}  // namespace

TorResult tor(const ModulePresentation& m, const ModulePresentation& n, unsigned max_i, const ResolveOptions& options) {
  if (m.ring_ptr() != n.ring_ptr() && !(m.ring().relations() == n.ring().relations() &&
                                        m.ring().variables() == n.ring().variables() &&
                                        m.ring().field() == n.ring().field())) {
    throw ValidationError("Tor of modules over different rings");
  }
  TorResult out;
  out.resolution = resolve(m, max_i + 1, options);
  const ResolutionPrefix& p = out.resolution.prefix;
  out.budget_exceeded = p.budget_exceeded;
  out.budget_message = p.budget_message;
  const QuotientRing& r = m.ring();
  const detail::MaterializedModule nm(n);

  // Tor_i needs F_{i+1}; a truncated resolution still yields the lower indices.
  const std::size_t available = p.steps.size();
  const std::size_t top = std::min<std::size_t>(max_i, available >= 2 ? available - 2 : 0);
  if (available < 2) return out;

  auto degrees_of = [&](std::size_t i) -> const std::vector<int>& { return p.steps[i].degrees; };
  int lo = 0, hi = -1;
  bool first = true;
  for (std::size_t i = 0; i <= top + 1; ++i) {
    for (int a : degrees_of(i)) {
      if (first) {
        lo = a + nm.low();
        hi = a + nm.high();
        first = false;
      }
      lo = std::min(lo, a + nm.low());
      hi = std::max(hi, a + nm.high());
    }
  }

  const std::size_t width = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  // rank[D][i] of d_i (x) N in degree D, i = 1..top+1.
  std::vector<std::vector<std::size_t>> rank(width, std::vector<std::size_t>(top + 2, 0));
  detail::for_each_degree(lo, hi, options.execution, [&](int d) {
    for (std::size_t i = 1; i <= top + 1; ++i) {
      rank[d - lo][i] = tensor_rank(r, p.steps[i], degrees_of(i - 1), nm, d);
    }
  });

  out.dims.assign(top + 1, 0);
  out.graded.resize(top + 1);
  for (int d = lo; d <= hi; ++d) {
    for (std::size_t i = 0; i <= top; ++i) {
      const std::size_t dim = TensorLayout(degrees_of(i), nm, d).dim;
      const std::size_t out_rank = i == 0 ? 0 : rank[d - lo][i];
      const std::size_t h = dim - out_rank - rank[d - lo][i + 1];
      if (h != 0) {
        out.graded[i][d] = h;
        out.dims[i] += h;
      }
    }
  }
  return out;
}

}  // namespace golodkit
