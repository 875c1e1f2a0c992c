#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "golodkit/exactmath/polynomial.hpp"

namespace golodkit {

// Univariate polynomial in t with arbitrary-precision integer coefficients;
// index i holds the coefficient of t^i. The leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(unsigned degree, const mpz_class& c = 1);
  // (1 + t)^e, the recurring numerator of Poincare series.
  static IntPolynomial one_plus_t_pow(unsigned e);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const { return c_.back(); }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const mpz_class& s);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned e) const;
  IntPolynomial derivative() const;
  // p(-t).
  IntPolynomial reflect() const;

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval(const mpz_class& x) const;

  mpz_class content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  // Human-readable form in t, e.g. "1 - 5*t^2 - 5*t^3 + t^5"; parses back
  // under the polynomial grammar with context [t].
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

enum class IntOp { add, sub, mul };

IntPolynomial intpoly_arith(IntOp op, const IntPolynomial& a, const IntPolynomial& b);
mpq_class intpoly_eval(const IntPolynomial& p, const mpq_class& x);

// Independent evaluation path (sum of c_i x^i with explicit powers); used to
// cross-check the Horner evaluation.
mpq_class intpoly_eval_powers(const IntPolynomial& p, const mpq_class& x);

// Exact quotient a / b over Z; throws if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Converts a univariate polynomial with integral coefficients (over Q).
IntPolynomial to_intpoly(const Polynomial& p);
IntPolynomial parse_intpoly(const std::string& text, const std::string& var = "t");

// Dense polynomial over Q used by the gcd and root-isolation machinery.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  const mpq_class& leading() const { return c_.back(); }

  RatPolynomial derivative() const;
  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
  RatPolynomial monic() const;
  RatPolynomial operator-() const;

  // Clears denominators and content; positive leading coefficient.
  IntPolynomial to_primitive_int() const;

  // Euclidean division: *this = q * d + r, deg r < deg d.
  void divmod(const RatPolynomial& d, RatPolynomial& q, RatPolynomial& r) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

}  // namespace golodkit
