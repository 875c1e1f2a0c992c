#pragma once

// Sparse semi-echelon elimination used by the resolution, Koszul and Tor
// code. Vectors are sorted (index, value) lists; pivots are the smallest
// index. Each stored row may carry a "combination" recording which input
// columns it came from, so a vector reducing to zero hands back a kernel
// element.
//
// Two field policies: fraction-free over Z (rows kept primitive) for Q,
// and plain elimination over F_p.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "golodkit/exactmath/scalar.hpp"

namespace golodkit::detail {

struct IntegerPolicy {
  using Value = mpz_class;

  static bool is_zero(const Value& v) { return sgn(v) == 0; }
};

struct ModularPolicy {
  using Value = std::uint32_t;

  static bool is_zero(Value v) { return v == 0; }
};

template <class P>
using SparseVec = std::vector<std::pair<std::uint32_t, typename P::Value>>;

template <class P>
class Echelon;

// a*x + b*y, dropping zeros.
inline SparseVec<IntegerPolicy> combine(const mpz_class& a, const SparseVec<IntegerPolicy>& x, const mpz_class& b,
                                        const SparseVec<IntegerPolicy>& y) {
  SparseVec<IntegerPolicy> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  mpz_class t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      t = a * x[i].second + b * y[j].second;
      if (sgn(t) != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

// x + b*y mod p.
inline SparseVec<ModularPolicy> combine(std::uint32_t p, const SparseVec<ModularPolicy>& x, std::uint32_t b,
                                        const SparseVec<ModularPolicy>& y) {
  SparseVec<ModularPolicy> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, static_cast<std::uint32_t>(std::uint64_t{b} * y[j].second % p));
      ++j;
    } else {
      const std::uint64_t t = (x[i].second + std::uint64_t{b} * y[j].second) % p;
      if (t != 0) out.emplace_back(x[i].first, static_cast<std::uint32_t>(t));
      ++i;
      ++j;
    }
  }
  return out;
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

template <>
class Echelon<IntegerPolicy> {
 public:
  using Vec = SparseVec<IntegerPolicy>;

  explicit Echelon(bool track = false) : track_(track) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

  // Reduces v (and its combination) until its leading index is not a pivot.
  // Returns true if v became zero.
  bool reduce(Vec& v, Vec& combo) const {
    while (!v.empty()) {
      auto it = pivot_.find(v.front().first);
      if (it == pivot_.end()) return false;
      const Vec& r = rows_[it->second];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), v.front().second.get_mpz_t());
      const mpz_class a = r.front().second / g;
      const mpz_class b = -(v.front().second / g);
      v = combine(a, v, b, r);
      if (track_) combo = combine(a, combo, b, combos_[it->second]);
      make_primitive(v, combo);
    }
    return true;
  }

  // Inserts v (already reduced, nonzero) as a new row.
  void insert(Vec v, Vec combo) {
    pivot_.emplace(v.front().first, rows_.size());
    rows_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
  }

  // Reduce then insert if nonzero. Returns false if v was dependent.
  bool add(Vec v, Vec combo = {}) {
    make_primitive(v, combo);
    if (reduce(v, combo)) {
      if (track_) kernel_.push_back(std::move(combo));
      return false;
    }
    insert(std::move(v), std::move(combo));
    return true;
  }

  std::vector<Vec>& kernel() noexcept { return kernel_; }

 private:
  void make_primitive(Vec& v, Vec& combo) const {
    mpz_class g = 0;
    for (const auto& [i, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (track_) {
      for (const auto& [i, x] : combo) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) return;
    const Vec& lead_src = v.empty() ? combo : v;
    if (sgn(lead_src.front().second) < 0) g = -g;
    if (g == 1) return;
    for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (track_) {
      for (auto& [i, x] : combo) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }

  bool track_;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
  std::vector<Vec> kernel_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
};

template <>
class Echelon<ModularPolicy> {
 public:
  using Vec = SparseVec<ModularPolicy>;

  Echelon(std::uint32_t p, bool track = false) : p_(p), track_(track) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

  bool reduce(Vec& v, Vec& combo) const {
    while (!v.empty()) {
      auto it = pivot_.find(v.front().first);
      if (it == pivot_.end()) return false;
      const std::uint32_t b = p_ - v.front().second;  // rows are monic
      v = combine(p_, v, b, rows_[it->second]);
      if (track_) combo = combine(p_, combo, b, combos_[it->second]);
    }
    return true;
  }

  void insert(Vec v, Vec combo) {
    const std::uint32_t inv = inverse_mod(v.front().second, p_);
    for (auto& [i, x] : v) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p_);
    if (track_) {
      for (auto& [i, x] : combo) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p_);
    }
    pivot_.emplace(v.front().first, rows_.size());
    rows_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
  }

  bool add(Vec v, Vec combo = {}) {
    if (reduce(v, combo)) {
      if (track_) kernel_.push_back(std::move(combo));
      return false;
    }
    insert(std::move(v), std::move(combo));
    return true;
  }

  std::vector<Vec>& kernel() noexcept { return kernel_; }

 private:
  std::uint32_t p_;
  bool track_;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
  std::vector<Vec> kernel_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
};

}  // namespace golodkit::detail
