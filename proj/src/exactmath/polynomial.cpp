#include "golodkit/exactmath/polynomial.hpp"

#include <algorithm>

#include "golodkit/error.hpp"

namespace golodkit {

namespace {

std::uint32_t leading_exponent(const Monomial& m) {
  for (std::uint32_t e : m.exponents()) {
    if (e != 0) return e;
  }
  return 0;
}

}  // namespace

ContextPtr make_context(std::vector<std::string> names, Field field) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw ValidationError("duplicate variable name '" + names[i] + "'");
    }
  }
  return std::make_shared<const VarContext>(VarContext{std::move(names), field});
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& c) {
  Polynomial p(ctx);
  p.add_term(Monomial(ctx->names.size()), c);
  return p;
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  const std::size_t n = ctx->names.size();
  const Field f = ctx->field;
  return term(std::move(ctx), Monomial::variable(n, index), Scalar(f, 1L));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(field()) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.nvars() != nvars()) throw ValidationError("monomial does not match variable context");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_) throw ValidationError("polynomial without variable context");
  if (!(ctx_->field == o.ctx_->field)) {
    throw ValidationError("field mismatch: " + ctx_->field.name() + " vs " + o.ctx_->field.name());
  }
  if (ctx_->names != o.ctx_->names) throw ValidationError("variable context mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Scalar& s) {
  Polynomial out(a.ctx_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * s);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial out(ctx_);
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the deglex order of the terms.
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, Scalar(field(), 1L));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ctx_ != b.ctx_ && !(a.ctx_ && b.ctx_ && *a.ctx_ == *b.ctx_)) return false;
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ctx_->names;
  const bool rational = field().is_rational();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = rational && c.sign() < 0;
    Scalar magnitude = negative ? -c : c;
    std::string coeff = magnitude.to_string();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += coeff;
    } else if (magnitude.is_one()) {
      // A leading "-x^2" would parse as (-x)^2, so spell the unit out.
      if (first && negative && leading_exponent(m) > 1) out += "1*";
      out += m.to_string(names);
    } else {
      out += coeff + '*' + m.to_string(names);
    }
    first = false;
  }
  return out;
}

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
  }
  throw InvariantFailure("unknown polynomial operation");
}

Polynomial poly_scale(const Polynomial& a, const Scalar& s) {
  if (!(s.field() == a.field())) throw ValidationError("field mismatch in scale");
  return a * s;
}

Homogeneity homogeneous_degree(const Polynomial& f) {
  Homogeneity h;
  if (f.is_zero()) {
    h.is_zero = true;
    return h;
  }
  const unsigned d = f.terms().begin()->first.degree();
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != d) return h;
  }
  h.degree = d;
  return h;
}

Polynomial embed(const Polynomial& f, const ContextPtr& target) {
  const auto& src = f.context()->names;
  std::vector<std::size_t> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = std::find(target->names.begin(), target->names.end(), src[i]);
    if (it == target->names.end()) throw ValidationError("variable '" + src[i] + "' missing from target context");
    where[i] = static_cast<std::size_t>(it - target->names.begin());
  }
  if (!(f.field() == target->field)) throw ValidationError("field mismatch while embedding");
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(target->names.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) e[where[i]] = m[i];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace golodkit
