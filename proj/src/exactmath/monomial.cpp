#include "golodkit/exactmath/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "golodkit/error.hpp"

namespace golodkit {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) throw InvariantFailure("monomial quotient is not a monomial");
    q.exps_[i] = other.exps_[i] - exps_[i];
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw ValidationError("monomial arity mismatch");
  Monomial m(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? std::string("1") : out;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const std::size_t n = a.nvars();
  if (order == MonomialOrder::deglex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace golodkit
