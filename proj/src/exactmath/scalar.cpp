#include "golodkit/exactmath/scalar.hpp"

#include "golodkit/error.hpp"

namespace golodkit {

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw ValidationError("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field f, long v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    r_ = reduce_mod(mpz_class(v), f.characteristic());
  }
}

Scalar::Scalar(Field f, const mpz_class& v) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    r_ = reduce_mod(v, f.characteristic());
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    // Copy the parts: GMP refuses to copy a non-canonical quotient.
    q_.get_num() = v.get_num();
    q_.get_den() = v.get_den();
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = f.characteristic();
  const std::uint32_t den = reduce_mod(v.get_den(), p);
  if (den == 0) {
    throw ValidationError("rational " + v.get_str() + " has no image in " + f.name());
  }
  const std::uint64_t num = reduce_mod(v.get_num(), p);
  r_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw ValidationError("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    const std::uint64_t s = std::uint64_t{r_} + o.r_;
    r_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    const std::uint32_t p = field_.characteristic();
    out.r_ = pow_mod(r_, p - 2, p);
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace golodkit
