#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "golodkit/exactmath/monomial.hpp"
#include "golodkit/exactmath/scalar.hpp"

namespace golodkit {

// Ordered variable names plus the coefficient field. Polynomials may only be
// combined when their contexts compare equal.
struct VarContext {
  std::vector<std::string> names;
  Field field;

  friend bool operator==(const VarContext&, const VarContext&) = default;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, Field field);

// Sparse distributed polynomial; terms are kept in descending deglex order and
// never carry a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, DeglexGreater>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(ContextPtr ctx, const Scalar& c);
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Scalar& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);

  const ContextPtr& context() const noexcept { return ctx_; }
  Field field() const { return ctx_->field; }
  std::size_t nvars() const { return ctx_->names.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const;
  // Adds c*m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Scalar& s);
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Printed form parses back to the same polynomial whenever every
  // coefficient is an integer (the expression grammar has no division).
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  ContextPtr ctx_;
  TermMap terms_;
};

enum class ArithOp { add, mul };

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Scalar& s);

struct Homogeneity {
  std::optional<unsigned> degree;  // set iff every term has this degree
  bool is_zero = false;
};

Homogeneity homogeneous_degree(const Polynomial& f);

// Copies f into a context whose variable list contains every name of f's
// context; coefficients and exponents are carried over by name.
Polynomial embed(const Polynomial& f, const ContextPtr& target);

}  // namespace golodkit
