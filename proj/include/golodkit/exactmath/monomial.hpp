#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace golodkit {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  // Requires divides(other) from the caller's side: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_one() const noexcept { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

enum class MonomialOrder { degrevlex, deglex };

// Three-way comparison under the given order: negative if a < b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

// Descending deglex; the internal storage order of polynomials.
struct DeglexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::deglex) > 0;
  }
};

}  // namespace golodkit
