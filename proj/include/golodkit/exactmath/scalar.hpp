#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace golodkit {

// Coefficient field of a session: the rationals, or a prime field F_p with
// p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of a Field. Rationals are kept canonical (lowest terms, positive
// denominator) by GMP; residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long v);
  Scalar(Field f, const mpz_class& v);
  Scalar(Field f, const mpq_class& v);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Valid only over Q.
  const mpq_class& rational() const { return q_; }
  // Valid only over F_p.
  std::uint32_t residue() const noexcept { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Over Q: sign of the value. Over F_p: 0 for zero, 1 otherwise.
  int sign() const;
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

}  // namespace golodkit
