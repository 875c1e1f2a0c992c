#include "linalg.hpp"

#include "linear_engine.hpp"

namespace golodkit::detail {

namespace {

// Over Q: integer vector equal to L * v, where L clears the denominators.
SparseVec<IntegerPolicy> to_integer(const SparseScalarVec& v, mpz_class& scale) {
  scale = 1;
  for (const auto& [i, s] : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), s.rational().get_den_mpz_t());
  SparseVec<IntegerPolicy> out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) out.emplace_back(i, s.rational().get_num() * (scale / s.rational().get_den()));
  return out;
}

SparseVec<ModularPolicy> to_modular(const SparseScalarVec& v) {
  SparseVec<ModularPolicy> out;
  out.reserve(v.size());
  for (const auto& [i, s] : v) out.emplace_back(i, s.residue());
  return out;
}

SparseScalarVec from_integer(Field f, const SparseVec<IntegerPolicy>& v) {
  SparseScalarVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, Scalar(f, x));
  return out;
}

SparseScalarVec from_modular(Field f, const SparseVec<ModularPolicy>& v) {
  SparseScalarVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, Scalar(f, static_cast<long>(x)));
  return out;
}

}  // namespace

std::vector<SparseScalarVec> kernel_basis(Field f, const std::vector<SparseScalarVec>& columns) {
  std::vector<SparseScalarVec> out;
  if (f.is_rational()) {
    Echelon<IntegerPolicy> ech(true);
    mpz_class scale;
    for (std::uint32_t j = 0; j < columns.size(); ++j) {
      auto v = to_integer(columns[j], scale);
      ech.add(std::move(v), {{j, scale}});
    }
    for (const auto& k : ech.kernel()) out.push_back(from_integer(f, k));
  } else {
    Echelon<ModularPolicy> ech(f.characteristic(), true);
    for (std::uint32_t j = 0; j < columns.size(); ++j) ech.add(to_modular(columns[j]), {{j, 1U}});
    for (const auto& k : ech.kernel()) out.push_back(from_modular(f, k));
  }
  return out;
}

std::vector<SparseScalarVec> span_basis(Field f, const std::vector<SparseScalarVec>& vecs) {
  std::vector<SparseScalarVec> out;
  if (f.is_rational()) {
    Echelon<IntegerPolicy> ech;
    mpz_class scale;
    for (const auto& v : vecs) ech.add(to_integer(v, scale));
    for (const auto& r : ech.rows()) out.push_back(from_integer(f, r));
  } else {
    Echelon<ModularPolicy> ech(f.characteristic());
    for (const auto& v : vecs) ech.add(to_modular(v));
    for (const auto& r : ech.rows()) out.push_back(from_modular(f, r));
  }
  return out;
}

std::size_t vector_rank(Field f, const std::vector<SparseScalarVec>& vecs) {
  if (f.is_rational()) {
    Echelon<IntegerPolicy> ech;
    mpz_class scale;
    for (const auto& v : vecs) ech.add(to_integer(v, scale));
    return ech.rank();
  }
  Echelon<ModularPolicy> ech(f.characteristic());
  for (const auto& v : vecs) ech.add(to_modular(v));
  return ech.rank();
}

std::vector<std::size_t> select_independent(Field f, const std::vector<SparseScalarVec>& base,
                                             const std::vector<SparseScalarVec>& candidates) {
  std::vector<std::size_t> chosen;
  if (f.is_rational()) {
    Echelon<IntegerPolicy> ech;
    mpz_class scale;
    for (const auto& v : base) ech.add(to_integer(v, scale));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (ech.add(to_integer(candidates[i], scale))) chosen.push_back(i);
    }
  } else {
    Echelon<ModularPolicy> ech(f.characteristic());
    for (const auto& v : base) ech.add(to_modular(v));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (ech.add(to_modular(candidates[i]))) chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace golodkit::detail
