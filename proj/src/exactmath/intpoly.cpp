#include "golodkit/exactmath/intpoly.hpp"

#include <algorithm>

#include "golodkit/error.hpp"
#include "golodkit/exactmath/parser.hpp"

namespace golodkit {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(unsigned degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_t_pow(unsigned e) { return IntPolynomial{1, 1}.pow(e); }

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const mpz_class& s) {
  IntPolynomial out = a;
  for (auto& c : out.c_) c *= s;
  out.trim();
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflect() const {
  IntPolynomial out = *this;
  for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
  return out;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) g = ::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial out = *this;
  for (auto& c : out.c_) c /= g;
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const bool negative = sgn(c_[i]) < 0;
    const mpz_class mag = abs(c_[i]);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      // A leading "-t^2" would parse as (-t)^2.
      if (mag != 1 || (first && negative && i > 1)) out += mag.get_str() + '*';
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
    first = false;
  }
  return out;
}

IntPolynomial intpoly_arith(IntOp op, const IntPolynomial& a, const IntPolynomial& b) {
  switch (op) {
    case IntOp::add:
      return a + b;
    case IntOp::sub:
      return a - b;
    case IntOp::mul:
      return a * b;
  }
  throw InvariantFailure("unknown integer polynomial operation");
}

mpq_class intpoly_eval(const IntPolynomial& p, const mpq_class& x) { return p.eval(x); }

mpq_class intpoly_eval_powers(const IntPolynomial& p, const mpq_class& x) {
  mpq_class sum = 0;
  mpq_class power = 1;
  for (const auto& c : p.coefficients()) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvariantFailure("inexact polynomial division");
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(rem.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) throw InvariantFailure("inexact polynomial division");
    q[k] = top / bc[db];
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * bc[j];
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw InvariantFailure("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return gcd(RatPolynomial(a), RatPolynomial(b)).to_primitive_int();
}

IntPolynomial to_intpoly(const Polynomial& p) {
  if (p.nvars() != 1) throw ValidationError("expected a univariate polynomial");
  if (!p.field().is_rational()) throw ValidationError("integer polynomials live over QQ");
  std::vector<mpz_class> c;
  for (const auto& [m, s] : p.terms()) {
    const mpq_class& q = s.rational();
    if (q.get_den() != 1) throw ValidationError("non-integer coefficient " + q.get_str());
    if (c.size() <= m.degree()) c.resize(m.degree() + 1, 0);
    c[m.degree()] = q.get_num();
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial parse_intpoly(const std::string& text, const std::string& var) {
  return to_intpoly(parse_poly(text, make_context({var}, Field::rationals())));
}

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  c_.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) c_.emplace_back(c);
}

void RatPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(d));
}

mpq_class RatPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  RatPolynomial out = *this;
  const mpq_class lc = leading();
  for (auto& c : out.c_) c /= lc;
  return out;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPolynomial RatPolynomial::to_primitive_int() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : c_) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(mpz_class(c * l));
  return IntPolynomial(std::move(out)).primitive();
}

void RatPolynomial::divmod(const RatPolynomial& d, RatPolynomial& q, RatPolynomial& r) const {
  if (d.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  std::vector<mpq_class> quo(rem.size() > dd ? rem.size() - dd : 0, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const mpq_class factor = rem[k + dd] / d.c_[dd];
    if (sgn(factor) == 0) continue;
    quo[k] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * d.c_[j];
  }
  q = RatPolynomial(std::move(quo));
  r = RatPolynomial(std::move(rem));
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial q;
    RatPolynomial r;
    x.divmod(y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace golodkit
