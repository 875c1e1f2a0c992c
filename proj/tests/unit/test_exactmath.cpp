#include <doctest.h>

#include <random>

#include "golodkit/error.hpp"
#include "golodkit/exactmath/intpoly.hpp"
#include "golodkit/exactmath/parser.hpp"
#include "golodkit/exactmath/polynomial.hpp"

using namespace golodkit;

namespace {

ContextPtr xyz(Field f = Field::rationals()) { return make_context({"x", "y", "z"}, f); }

Polynomial random_poly(std::mt19937& rng, const ContextPtr& ctx, int max_terms, int max_deg, bool homogeneous = false,
                       unsigned fixed_deg = 0) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, ctx->names.size() - 1);
  Polynomial p(ctx);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<std::uint32_t> e(ctx->names.size(), 0);
    if (homogeneous) {
      for (unsigned k = 0; k < fixed_deg; ++k) ++e[var(rng)];
    } else {
      for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
    }
    p.add_term(Monomial(std::move(e)), Scalar(ctx->field, static_cast<long>(coeff(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("scalars stay canonical") {
  const Field q = Field::rationals();
  Scalar a(q, mpq_class(6, 4));
  CHECK(a.rational() == mpq_class(3, 2));
  Scalar b(q, mpq_class(mpz_class(2), mpz_class(-4)));
  CHECK(b.rational() == mpq_class(-1, 2));
  CHECK(b.rational().get_den() > 0);
  const Field f7 = Field::prime(7);
  Scalar r(f7, -1L);
  CHECK(r.residue() == 6);
  CHECK((Scalar(f7, 3L) * Scalar(f7, 5L)).residue() == 1);
  CHECK((Scalar(f7, 3L).inverse() * Scalar(f7, 3L)).is_one());
  CHECK_THROWS_AS(Field::prime(8), ValidationError);
  CHECK_THROWS_AS(Scalar(q, 1L) + Scalar(f7, 1L), ValidationError);
}

TEST_CASE("parse_poly examples") {
  const auto ctx = xyz();
  SUBCASE("z^2 + x*y") {
    const Polynomial p = parse_poly("z^2 + x*y", ctx);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(Monomial({0, 0, 2})).is_one());
    CHECK(p.coefficient(Monomial({1, 1, 0})).is_one());
  }
  SUBCASE("zero") { CHECK(parse_poly("0", make_context({"x"}, Field::rationals())).is_zero()); }
  SUBCASE("x^2 - y^2") {
    const Polynomial p = parse_poly("x^2 - y^2", ctx);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(Monomial({2, 0, 0})).rational() == 1);
    CHECK(p.coefficient(Monomial({0, 2, 0})).rational() == -1);
  }
  SUBCASE("unary minus binds to the base") {
    CHECK(parse_poly("-x^2", ctx) == parse_poly("x^2", ctx));
    CHECK(parse_poly("-(x)*y", ctx) == -parse_poly("x*y", ctx));
    CHECK(parse_poly("--x", ctx) == parse_poly("x", ctx));
  }
  SUBCASE("whitespace and parentheses") {
    CHECK(parse_poly(" ( x + y ) ^ 2 ", ctx) == parse_poly("x^2 + 2*x*y + y^2", ctx));
    CHECK(parse_poly("x^0", ctx) == parse_poly("1", ctx));
  }
}

TEST_CASE("parse_poly errors") {
  const auto ctx = xyz();
  CHECK_THROWS_AS(parse_poly("2x", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("x y", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + y", ctx), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("w + x", ctx), doctest::Contains("unknown variable 'w'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("x^-1", ctx), doctest::Contains("negative exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("x^1.5", ctx), doctest::Contains("non-integer"), ParseError);
  try {
    parse_poly("x + * y", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(make_context({"x", "x"}, Field::rationals()), ValidationError);
  CHECK_THROWS_AS(parse_poly("x", make_context({"1x"}, Field::rationals())), ValidationError);
}

TEST_CASE("poly_arith examples") {
  const auto ctx = make_context({"x", "y"}, Field::rationals());
  const Polynomial x = parse_poly("x", ctx);
  const Polynomial y = parse_poly("y", ctx);
  CHECK(poly_arith(ArithOp::mul, x + y, x - y) == parse_poly("x^2 - y^2", ctx));
  CHECK(poly_arith(ArithOp::add, parse_poly("x^2", ctx), parse_poly("0 - x^2", ctx)).is_zero());
  CHECK(poly_scale(x, Scalar(Field::rationals(), mpq_class(1, 2))).coefficient(Monomial({1, 0})).rational() ==
        mpq_class(1, 2));

  const auto f2 = make_context({"x", "y"}, Field::prime(2));
  const Polynomial s = parse_poly("x + y", f2);
  CHECK(poly_arith(ArithOp::mul, s, s) == parse_poly("x^2 + y^2", f2));

  const auto other = make_context({"y", "x"}, Field::rationals());
  CHECK_THROWS_AS(poly_arith(ArithOp::add, x, parse_poly("x", other)), ValidationError);
  CHECK_THROWS_AS(poly_arith(ArithOp::add, x, parse_poly("x", f2)), ValidationError);
}

TEST_CASE("homogeneous_degree") {
  const auto ctx = xyz();
  CHECK(homogeneous_degree(parse_poly("z^2 + x*y", ctx)).degree == 2U);
  const Homogeneity mixed = homogeneous_degree(parse_poly("x + x^2", ctx));
  CHECK_FALSE(mixed.degree.has_value());
  CHECK_FALSE(mixed.is_zero);
  const Homogeneity zero = homogeneous_degree(parse_poly("0", ctx));
  CHECK_FALSE(zero.degree.has_value());
  CHECK(zero.is_zero);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240601);
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    const auto ctx = xyz(f);
    for (int trial = 0; trial < 1000; ++trial) {
      const Polynomial a = random_poly(rng, ctx, 4, 3);
      const Polynomial b = random_poly(rng, ctx, 4, 3);
      const Polynomial c = random_poly(rng, ctx, 4, 3);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      const Polynomial combo = a * b + c;
      for (const auto& [m, s] : combo.terms()) REQUIRE_FALSE(s.is_zero());
    }
  }
}

TEST_CASE("print then parse is the identity on integer polynomials") {
  std::mt19937 rng(7);
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    const auto ctx = xyz(f);
    for (int trial = 0; trial < 500; ++trial) {
      const Polynomial p = random_poly(rng, ctx, 5, 3);
      REQUIRE(parse_poly(p.to_string(), ctx) == p);
    }
  }
  const auto ctx = xyz();
  const Polynomial tricky = parse_poly("0 - x^2*y + 3*z", ctx);
  CHECK(parse_poly(tricky.to_string(), ctx) == tricky);
}

TEST_CASE("products of homogeneous polynomials are homogeneous") {
  std::mt19937 rng(11);
  const auto ctx = xyz();
  std::uniform_int_distribution<unsigned> deg(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned da = deg(rng);
    const unsigned db = deg(rng);
    const Polynomial a = random_poly(rng, ctx, 4, 0, true, da);
    const Polynomial b = random_poly(rng, ctx, 4, 0, true, db);
    const Homogeneity h = homogeneous_degree(a * b);
    if (a.is_zero() || b.is_zero()) {
      REQUIRE(h.is_zero);
    } else {
      REQUIRE(h.degree == da + db);
    }
  }
}

TEST_CASE("intpoly examples") {
  const IntPolynomial d{1, 0, -5, -5, 0, 1};
  CHECK(intpoly_eval(d, 1) == -8);
  CHECK(intpoly_arith(IntOp::mul, IntPolynomial{1, 1}.pow(2), IntPolynomial{1, -2}) == IntPolynomial{1, 0, -3, -2});
  CHECK(intpoly_eval(d, 0) == 1);
  CHECK(intpoly_arith(IntOp::sub, d, d).is_zero());
  CHECK(intpoly_arith(IntOp::add, IntPolynomial{1, 2}, IntPolynomial{0, -2}) == IntPolynomial{1});
  CHECK(IntPolynomial{1, 0, -5, -5, 0, 1}.to_string() == "1 - 5*t^2 - 5*t^3 + t^5");
  CHECK(parse_intpoly("(1+t)^3*(1-3*t+t^2)") == d);
  CHECK(IntPolynomial{1, -5, 5, -1} == IntPolynomial{1, 5, 5, 1}.reflect());
}

TEST_CASE("Horner and power-sum evaluation agree") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<mpz_class> c(1 + trial % 9);
    for (auto& v : c) v = coeff(rng);
    const IntPolynomial p(c);
    const mpq_class x(num(rng), den(rng));
    mpq_class xc = x;
    xc.canonicalize();
    REQUIRE(intpoly_eval(p, xc) == intpoly_eval_powers(p, xc));
    REQUIRE(parse_intpoly(p.to_string()) == p);
  }
}

TEST_CASE("integer polynomial gcd and exact division") {
  const IntPolynomial a = IntPolynomial{1, -2} * IntPolynomial{1, 1}.pow(2);
  const IntPolynomial b = IntPolynomial{1, 1} * IntPolynomial{1, -3};
  CHECK(gcd(a, b) == IntPolynomial{1, 1});
  CHECK(exact_divide(a, IntPolynomial{1, 1}) == IntPolynomial{1, -1, -2});
  CHECK_THROWS_AS(exact_divide(a, IntPolynomial{1, -3}), InvariantFailure);
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{}) == IntPolynomial{1, 2});
}
