#include "golodkit/homology/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>

#include "golodkit/error.hpp"
#include "linalg.hpp"
#include "materialize.hpp"
#include "parallel.hpp"

namespace golodkit {

using detail::FreeLayout;

std::size_t default_matrix_cap() {
  if (const char* env = std::getenv("GOLODKIT_MAX_MATRIX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& row : graded) {
    std::size_t s = 0;
    for (const auto& [j, b] : row) s += b;
    out.push_back(s);
  }
  return out;
}

BettiTable betti_table(const ResolutionPrefix& p) {
  BettiTable t;
  for (const auto& step : p.steps) {
    std::map<int, std::size_t> row;
    for (int d : step.degrees) ++row[d];
    t.graded.push_back(std::move(row));
  }
  return t;
}

namespace {

void check_budget(std::size_t columns, std::size_t cap, std::size_t step, int degree) {
  if (columns > cap) {
    throw BudgetExceeded("step " + std::to_string(step) + ", degree " + std::to_string(degree) + ": matrix with " +
                         std::to_string(columns) + " columns exceeds the cap of " + std::to_string(cap));
  }
}

// Images of the basis of (src)_d under the differential, in (dst)_d coordinates.
std::vector<SparseScalarVec> image_columns(const QuotientRing& r, const FreeLayout& src, const FreeLayout& dst,
                                           const std::vector<FreeVector>& diff, int d) {
  std::vector<SparseScalarVec> cols(src.dim(d));
  for (std::uint32_t idx = 0; idx < cols.size(); ++idx) {
    const auto [g, b] = src.entry(d, idx);
    const FreeVector v = multiply(r, b, diff[g]);
    if (!v.empty()) cols[idx] = dst.coordinates(d, v);
  }
  return cols;
}

// x_v * k for every variable and every k of degree d - 1, in degree-d coordinates.
std::vector<SparseScalarVec> times_variables(const QuotientRing& r, const FreeLayout& layout,
                                             const std::vector<SparseScalarVec>& lower, int d) {
  std::vector<SparseScalarVec> out;
  for (const auto& k : lower) {
    const FreeVector e = layout.element(d - 1, k);
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      const FreeVector p = multiply(r, r.variable_index(v), e);
      if (!p.empty()) out.push_back(layout.coordinates(d, p));
    }
  }
  return out;
}

// Basis of U_d, the degree-d part of the submodule generated by the relations.
std::vector<SparseScalarVec> relation_span(const ModulePresentation& m, const FreeLayout& layout, int d) {
  const QuotientRing& r = m.ring();
  std::vector<SparseScalarVec> span;
  for (std::size_t c = 0; c < m.relations().size(); ++c) {
    const int rd = d - m.relation_degrees()[c];
    if (rd < 0 || rd > static_cast<int>(r.socle_degree())) continue;
    for (std::size_t b = r.degree_offset(rd); b < r.degree_offset(rd) + r.degree_dim(rd); ++b) {
      const FreeVector v = multiply(r, b, m.relations()[c]);
      if (!v.empty()) span.push_back(layout.coordinates(d, v));
    }
  }
  return detail::span_basis(r.field(), span);
}

// Computes F_i (generators and differential) from the steps so far. Also
// reports dim (ker d_{i-1})_d over the whole degree range of F_{i-1}.
ResolutionStep next_step(const ModulePresentation& m, const std::vector<ResolutionStep>& steps,
                         const std::vector<FreeLayout>& layouts, const ResolveOptions& opt,
                         std::map<int, std::size_t>& prev_kernel) {
  const QuotientRing& r = m.ring();
  const Field f = r.field();
  const std::size_t i = steps.size();
  const FreeLayout& prev = layouts[i - 1];
  ResolutionStep out;
  if (prev.empty()) {
    prev_kernel.clear();
    return out;
  }

  const int lo = prev.min_gen() + 1;
  const int hi = prev.max_gen() + static_cast<int>(r.socle_degree());
  if (lo > hi) {
    prev_kernel.clear();
    return out;
  }

  // Degree pieces of the submodule whose minimal generators become F_i.
  std::vector<std::vector<SparseScalarVec>> sub(hi - lo + 2);
  detail::for_each_degree(lo - 1, hi, opt.execution, [&](int d) {
    if (i == 1) {
      sub[d - lo + 1] = relation_span(m, prev, d);
    } else {
      check_budget(prev.dim(d), opt.max_columns, i, d);
      sub[d - lo + 1] = detail::kernel_basis(f, image_columns(r, prev, layouts[i - 2], steps[i - 1].differential, d));
    }
  });
  if (!sub[0].empty()) throw InvariantFailure("kernel meets the generators of F_" + std::to_string(i - 1));
  std::map<int, std::size_t> kernel;
  for (int d = lo; d <= hi; ++d) {
    if (!sub[d - lo + 1].empty()) kernel[d] = sub[d - lo + 1].size();
  }

  std::vector<std::vector<FreeVector>> chosen(hi - lo + 1);
  detail::for_each_degree(lo, hi, opt.execution, [&](int d) {
    const std::vector<SparseScalarVec> base = times_variables(r, prev, sub[d - lo], d);
    std::vector<SparseScalarVec> candidates;
    if (i == 1) {
      for (std::size_t c = 0; c < m.relations().size(); ++c) {
        if (m.relation_degrees()[c] == d) candidates.push_back(prev.coordinates(d, m.relations()[c]));
      }
    } else {
      candidates = sub[d - lo + 1];
    }
    for (std::size_t idx : detail::select_independent(f, base, candidates)) {
      chosen[d - lo].push_back(prev.element(d, candidates[idx]));
    }
  });

  for (int d = lo; d <= hi; ++d) {
    for (auto& g : chosen[d - lo]) {
      out.degrees.push_back(d);
      out.differential.push_back(std::move(g));
    }
  }
  prev_kernel = std::move(kernel);
  return out;
}

std::map<int, std::size_t> kernel_dims(const ModulePresentation& m, const std::vector<ResolutionStep>& steps,
                                       const std::vector<FreeLayout>& layouts, const ResolveOptions& opt) {
  const QuotientRing& r = m.ring();
  const std::size_t n = steps.size() - 1;
  const FreeLayout& top = layouts[n];
  std::map<int, std::size_t> out;
  if (top.empty()) return out;
  std::vector<std::size_t> dims(top.high() - top.low() + 1, 0);
  detail::for_each_degree(top.low(), top.high(), opt.execution, [&](int d) {
    if (n == 0) {
      dims[d - top.low()] = relation_span(m, top, d).size();
    } else {
      check_budget(top.dim(d), opt.max_columns, n + 1, d);
      const auto cols = image_columns(r, top, layouts[n - 1], steps[n].differential, d);
      dims[d - top.low()] = top.dim(d) - detail::vector_rank(r.field(), cols);
    }
  });
  for (int d = top.low(); d <= top.high(); ++d) {
    if (dims[d - top.low()] != 0) out[d] = dims[d - top.low()];
  }
  return out;
}

}  // namespace

Resolution resolve(const ModulePresentation& m, unsigned steps, const ResolveOptions& options) {
  Resolution res;
  ResolutionPrefix& p = res.prefix;
  p.module = m;
  const QuotientRing& r = m.ring();
  std::vector<FreeLayout> layouts;

  p.steps.push_back(ResolutionStep{m.generator_degrees(), {}});
  layouts.emplace_back(r, m.generator_degrees());
  // ker d_{n-1} for the newest step n; lets an over-budget run fall back to
  // a prefix whose last kernel is known.
  std::map<int, std::size_t> prev_kernel;
  try {
    for (unsigned i = 1; i <= steps; ++i) {
      ResolutionStep s = next_step(m, p.steps, layouts, options, prev_kernel);
      layouts.emplace_back(r, s.degrees);
      p.steps.push_back(std::move(s));
    }
    p.last_kernel_dims = kernel_dims(m, p.steps, layouts, options);
  } catch (const BudgetExceeded& e) {
    p.budget_exceeded = true;
    p.budget_message = e.what();
    if (p.steps.size() > 1) {
      p.steps.pop_back();
      p.last_kernel_dims = prev_kernel;
      p.budget_message += "; kept F_0..F_" + std::to_string(p.length()) + ", the part with a certified kernel";
    }
  }
  res.betti = betti_table(p);
  return res;
}

ExactnessCertificate exactness_certificate(const ResolutionPrefix& prefix, const ModulePresentation& m) {
  ExactnessCertificate cert;
  const QuotientRing& r = m.ring();
  const Field f = r.field();
  const std::size_t n = prefix.length();
  auto fail = [&](const std::string& why, std::optional<int> degree) {
    if (cert.failure.empty()) {
      cert.failure = why;
      cert.offending_degree = degree;
    }
  };
  if (prefix.steps.empty()) {
    fail("empty resolution", std::nullopt);
    return cert;
  }

  std::vector<FreeLayout> layouts;
  for (const auto& s : prefix.steps) layouts.emplace_back(r, s.degrees);
  const detail::MaterializedModule mm(m);

  // Minimality and homogeneity of every column.
  cert.minimal = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& step = prefix.steps[i];
    if (step.differential.size() != step.degrees.size()) {
      cert.minimal = false;
      fail("F_" + std::to_string(i) + " has mismatched generator data", std::nullopt);
      continue;
    }
    for (std::size_t j = 0; j < step.differential.size(); ++j) {
      const FreeVector& col = step.differential[j];
      bool good = !col.empty();
      for (const auto& e : col) {
        if (e.gen >= prefix.steps[i - 1].degrees.size() || e.basis >= r.dim() || e.coeff.is_zero() ||
            r.basis_degree(e.basis) == 0) {
          good = false;
        }
      }
      if (good) {
        try {
          good = free_degree(r, prefix.steps[i - 1].degrees, col) == step.degrees[j];
        } catch (const ValidationError&) {
          good = false;
        }
      }
      if (!good) {
        cert.minimal = false;
        fail("d_" + std::to_string(i) + " column " + std::to_string(j) + " is not a homogeneous element of m*F_" +
                 std::to_string(i - 1),
             step.degrees[j]);
      }
    }
  }
  if (!cert.minimal) return cert;

  // d o d = 0, and im d_1 inside the relations.
  cert.composes_to_zero = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& step = prefix.steps[i];
    for (std::size_t j = 0; j < step.differential.size(); ++j) {
      const int d = step.degrees[j];
      if (i == 1) {
        auto span = mm.relation_basis(d);
        const std::size_t before = span.size();
        span.push_back(layouts[0].coordinates(d, step.differential[j]));
        if (detail::vector_rank(f, span) != before) {
          cert.composes_to_zero = false;
          fail("d_1 column " + std::to_string(j) + " is not a relation of M", d);
        }
        continue;
      }
      std::map<std::uint32_t, Scalar> acc;
      for (const auto& e : step.differential[j]) {
        for (const auto& x : multiply(r, e.basis, prefix.steps[i - 1].differential[e.gen])) {
          const std::uint32_t idx = layouts[i - 2].index(d, x.gen, x.basis);
          auto [it, fresh] = acc.emplace(idx, Scalar(f));
          it->second += e.coeff * x.coeff;
        }
      }
      if (std::any_of(acc.begin(), acc.end(), [](const auto& kv) { return !kv.second.is_zero(); })) {
        cert.composes_to_zero = false;
        fail("d_" + std::to_string(i - 1) + " o d_" + std::to_string(i) + " is nonzero on column " + std::to_string(j), d);
      }
    }
  }

  // Per-degree ranks and the Euler ledger.
  int lo = layouts[0].empty() ? 0 : layouts[0].low();
  int hi = lo - 1;
  for (const auto& l : layouts) {
    if (l.empty()) continue;
    lo = std::min(lo, l.low());
    hi = std::max(hi, l.high());
  }
  for (const auto& [d, k] : prefix.last_kernel_dims) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const std::size_t width = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<std::vector<std::size_t>> ranks(width, std::vector<std::size_t>(n + 2, 0));
  std::vector<std::string> bad(width);
  detail::for_each_degree(lo, hi, Execution::parallel, [&](int d) {
    auto& rk = ranks[d - lo];
    for (std::size_t i = 1; i <= n; ++i) {
      if (layouts[i].dim(d) == 0) continue;
      rk[i] = detail::vector_rank(f, image_columns(r, layouts[i], layouts[i - 1], prefix.steps[i].differential, d));
    }
  });

  cert.ranks_exact = true;
  cert.euler_ok = true;
  for (int d = lo; d <= hi; ++d) {
    const auto& rk = ranks[d - lo];
    auto kernel_at = [&](std::size_t i) { return layouts[i].dim(d) - rk[i]; };
    auto stored = prefix.last_kernel_dims.find(d);
    const std::size_t last = stored == prefix.last_kernel_dims.end() ? 0 : stored->second;
    bool exact = true;
    if (n >= 1 && rk[1] != mm.relation_dim(d)) exact = false;
    for (std::size_t i = 1; i < n; ++i) {
      if (kernel_at(i) != rk[i + 1]) exact = false;
    }
    if (n >= 1 && kernel_at(n) != last) exact = false;
    if (n == 0 && mm.relation_dim(d) != last) exact = false;
    if (!exact) {
      cert.ranks_exact = false;
      fail("complex is not exact in degree " + std::to_string(d), d);
    }

    LedgerEntry entry;
    entry.degree = d;
    long sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      const long v = static_cast<long>(layouts[i].dim(d));
      sum += (i % 2 == 0) ? v : -v;
    }
    sum -= (n % 2 == 0) ? static_cast<long>(last) : -static_cast<long>(last);
    entry.alternating_sum = sum;
    entry.module_dim = mm.dim(d);
    entry.ok = sum == static_cast<long>(entry.module_dim);
    if (!entry.ok) {
      cert.euler_ok = false;
      fail("Euler ledger mismatch in degree " + std::to_string(d), d);
    }
    cert.ledger.push_back(entry);
  }
  cert.ok = cert.minimal && cert.composes_to_zero && cert.ranks_exact && cert.euler_ok;
  return cert;
}

}  // namespace golodkit
