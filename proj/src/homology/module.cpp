#include "golodkit/homology/module.hpp"

#include <algorithm>

#include "../ringkit/scalar_linalg.hpp"
#include "golodkit/error.hpp"
#include "linalg.hpp"
#include "materialize.hpp"

namespace golodkit {

namespace {

FreeVector column_vector(const QuotientRing& r, const std::vector<RingElement>& column) {
  FreeVector v;
  for (std::uint32_t g = 0; g < column.size(); ++g) {
    const RingElement& e = column[g];
    if (e.coords.size() != r.dim()) throw ValidationError("matrix entry does not belong to the module's ring");
    for (std::uint32_t b = 0; b < e.coords.size(); ++b) {
      if (!e.coords[b].is_zero()) v.push_back(FreeEntry{g, b, e.coords[b]});
    }
  }
  return v;
}

}  // namespace

int free_degree(const QuotientRing& r, const std::vector<int>& degrees, const FreeVector& v) {
  if (v.empty()) throw ValidationError("zero vector has no degree");
  const int d = degrees.at(v.front().gen) + static_cast<int>(r.basis_degree(v.front().basis));
  for (const auto& e : v) {
    if (degrees.at(e.gen) + static_cast<int>(r.basis_degree(e.basis)) != d) {
      throw ValidationError("inhomogeneous module element");
    }
  }
  return d;
}

FreeVector multiply(const QuotientRing& r, std::size_t basis, const FreeVector& v) {
  FreeVector out;
  for (const auto& e : v) {
    for (const auto& [k, c] : r.product(basis, e.basis)) out.push_back(FreeEntry{e.gen, k, e.coeff * c});
  }
  std::sort(out.begin(), out.end(),
            [](const FreeEntry& a, const FreeEntry& b) { return a.gen != b.gen ? a.gen < b.gen : a.basis < b.basis; });
  FreeVector merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().gen == e.gen && merged.back().basis == e.basis) {
      merged.back().coeff += e.coeff;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const FreeEntry& e) { return e.coeff.is_zero(); });
  return merged;
}

ModulePresentation ModulePresentation::from_matrix(RingPtr ring, std::vector<int> degrees,
                                                   const std::vector<std::vector<RingElement>>& columns,
                                                   std::string label) {
  if (!ring) throw ValidationError("module without a ring");
  ModulePresentation m;
  m.ring_ = std::move(ring);
  m.degrees_ = std::move(degrees);
  m.label_ = std::move(label);
  const QuotientRing& r = *m.ring_;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.degrees_.size()) {
      throw ValidationError("relation column " + std::to_string(c) + " has " + std::to_string(columns[c].size()) +
                            " entries for " + std::to_string(m.degrees_.size()) + " generators");
    }
    FreeVector v = column_vector(r, columns[c]);
    if (v.empty()) throw ValidationError("relation column " + std::to_string(c) + " is zero");
    int deg = 0;
    try {
      deg = free_degree(r, m.degrees_, v);
    } catch (const ValidationError&) {
      throw ValidationError("relation column " + std::to_string(c) + " is not homogeneous");
    }
    for (const auto& e : v) {
      if (r.basis_degree(e.basis) == 0) {
        throw ValidationError("relation column " + std::to_string(c) +
                              " has a unit entry (presentation is not minimal on generators)");
      }
    }
    m.relations_.push_back(std::move(v));
    m.relation_degrees_.push_back(deg);
  }
  return m;
}

ModulePresentation ModulePresentation::quotient_by_ideal(RingPtr ring, const std::vector<RingElement>& gens,
                                                         std::string label) {
  std::vector<std::vector<RingElement>> columns;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring->homogeneous_degree(g)) throw ValidationError("ideal generator is not homogeneous");
    columns.push_back({g});
  }
  return from_matrix(std::move(ring), {0}, columns, std::move(label));
}

ModulePresentation ModulePresentation::residue_field(RingPtr ring) {
  std::vector<RingElement> vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v) vars.push_back(ring->variable(v));
  return quotient_by_ideal(std::move(ring), vars, "k");
}

ModulePresentation ModulePresentation::free_module(RingPtr ring) {
  return from_matrix(std::move(ring), {0}, {}, "R");
}

std::map<int, std::size_t> module_hilbert(const ModulePresentation& m) {
  const detail::MaterializedModule mm(m);
  std::map<int, std::size_t> out;
  for (int d = mm.low(); d <= mm.high(); ++d) {
    if (mm.dim(d) != 0) out[d] = mm.dim(d);
  }
  return out;
}

namespace detail {

MaterializedModule::MaterializedModule(const ModulePresentation& m) : m_(&m), layout_(m.ring(), m.generator_degrees()) {
  if (layout_.empty()) return;
  const QuotientRing& r = m.ring();
  const Field f = r.field();
  for (int d = low(); d <= high(); ++d) {
    Piece p;
    std::vector<SparseScalarVec> span;
    for (std::size_t c = 0; c < m.relations().size(); ++c) {
      const int rd = d - m.relation_degrees()[c];
      if (rd < 0 || rd > static_cast<int>(r.socle_degree())) continue;
      for (std::size_t b = r.degree_offset(rd); b < r.degree_offset(rd) + r.degree_dim(rd); ++b) {
        const FreeVector v = multiply(r, b, m.relations()[c]);
        if (!v.empty()) span.push_back(layout_.coordinates(d, v));
      }
    }
    p.relations = span_basis(f, span);
    const std::size_t n = layout_.dim(d);
    DenseMatrix dense;
    for (const auto& v : p.relations) {
      std::vector<Scalar> row(n, Scalar(f));
      for (const auto& [i, s] : v) row[i] = s;
      dense.push_back(std::move(row));
    }
    Rref red = rref(std::move(dense), n);
    p.rref = std::move(red.rows);
    p.pivots = std::move(red.pivots);
    p.position.assign(n, -1);
    std::vector<bool> is_pivot(n, false);
    for (auto q : p.pivots) is_pivot[q] = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (is_pivot[i]) continue;
      p.position[i] = static_cast<std::int64_t>(p.free_coords.size());
      p.free_coords.push_back(i);
    }
    pieces_.push_back(std::move(p));
  }

  // Action tables.
  act_.resize(pieces_.size());
  for (int d = low(); d <= high(); ++d) {
    const std::size_t dm = dim(d);
    auto& table = act_[d - low()];
    table.assign(r.dim() * dm, {});
    for (std::size_t i = 0; i < dm; ++i) {
      const std::uint32_t coord = pieces_[d - low()].free_coords[i];
      const auto [g, b0] = layout_.entry(d, coord);
      const FreeVector base{FreeEntry{g, b0, Scalar(f, 1L)}};
      for (std::size_t b = 0; b < r.dim(); ++b) {
        const int target = d + static_cast<int>(r.basis_degree(b));
        if (target > high()) continue;
        const FreeVector prod = multiply(r, b, base);
        if (prod.empty()) continue;
        table[b * dm + i] = reduce(target, layout_.coordinates(target, prod));
      }
    }
  }
}

const MaterializedModule::Piece& MaterializedModule::piece(int d) const { return pieces_.at(d - low()); }

std::size_t MaterializedModule::dim(int d) const {
  if (layout_.empty() || d < low() || d > high()) return 0;
  return piece(d).free_coords.size();
}

std::size_t MaterializedModule::relation_dim(int d) const {
  if (layout_.empty() || d < low() || d > high()) return 0;
  return piece(d).relations.size();
}

const std::vector<SparseScalarVec>& MaterializedModule::relation_basis(int d) const {
  static const std::vector<SparseScalarVec> none;
  if (layout_.empty() || d < low() || d > high()) return none;
  return piece(d).relations;
}

SparseScalarVec MaterializedModule::reduce(int d, const SparseScalarVec& v) const {
  const Piece& p = piece(d);
  const Field f = m_->ring().field();
  std::vector<Scalar> dense(layout_.dim(d), Scalar(f));
  for (const auto& [i, s] : v) dense[i] = s;
  for (std::size_t k = 0; k < p.pivots.size(); ++k) {
    const Scalar c = dense[p.pivots[k]];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (!p.rref[k][i].is_zero()) dense[i] -= c * p.rref[k][i];
    }
  }
  SparseScalarVec out;
  for (std::uint32_t i = 0; i < p.free_coords.size(); ++i) {
    const Scalar& s = dense[p.free_coords[i]];
    if (!s.is_zero()) out.emplace_back(i, s);
  }
  return out;
}

const SparseScalarVec& MaterializedModule::act(std::size_t basis, int d, std::size_t i) const {
  static const SparseScalarVec none;
  if (layout_.empty() || d < low() || d > high()) return none;
  return act_[d - low()][basis * dim(d) + i];
}

}  // namespace detail

}  // namespace golodkit
