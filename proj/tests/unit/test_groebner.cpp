#include <doctest.h>

#include <random>

#include "golodkit/error.hpp"
#include "golodkit/exactmath/parser.hpp"
#include "golodkit/groebner/groebner.hpp"

using namespace golodkit;

namespace {

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ctx));
  return out;
}

const std::vector<std::string> kCompressed = {"x*z", "z^2+x*y", "y^2*z", "x^2", "y^3"};
const std::vector<std::string> kGasharovPeeva = {
    "2*x1*x3 + x2*x3", "x1*x4 + x2*x4", "x3^2 - x2*x5 + 2*x1*x5", "x4^2 - x2*x5 + x1*x5", "x1^2",
    "x2^2", "x3*x4", "x3*x5", "x4*x5", "x5^2"};

struct TestIdeal {
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

std::vector<TestIdeal> test_ideals() {
  return {
      {{"x", "y"}, {"x^2", "x*y", "y^2"}},
      {{"x", "y", "z"}, kCompressed},
      {{"x1", "x2", "x3", "x4", "x5"}, kGasharovPeeva},
      {{"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2"}},
      {{"w", "x", "y", "z"}, {"w^2", "x^2", "x*y", "y^2", "z^2"}},
      {{"x", "y", "z"}, {"x^2", "y^2", "x*z", "y*z", "x*y-z^2"}},
      {{"x", "y"}, {"x^3 + x*y^2", "y^3 - 2*x^2*y", "x^2*y^2"}},
  };
}

}  // namespace

TEST_CASE("buchberger examples") {
  const auto xy = make_context({"x", "y"}, Field::rationals());
  const auto mono = parse_all({"x^2", "x*y", "y^2"}, xy);
  const GroebnerBasis gb = buchberger(mono);
  CHECK(gb.generators().size() == 3);
  for (const auto& g : mono) {
    CHECK(std::find(gb.generators().begin(), gb.generators().end(), g) != gb.generators().end());
  }
  const StandardBasis sb = standard_monomials(gb);
  CHECK(sb.total == 3);
  CHECK(sb.hilbert_function() == std::vector<std::size_t>{1, 2});

  const auto xyz = make_context({"x", "y", "z"}, Field::rationals());
  const GroebnerBasis cgb = buchberger(parse_all(kCompressed, xyz));
  const StandardBasis csb = standard_monomials(cgb);
  CHECK(csb.total == 8);
  CHECK(csb.hilbert_function() == std::vector<std::size_t>{1, 3, 3, 1});
  // Under degrevlex the leading term of z^2 + x*y is x*y, so z^2 is the representative.
  CHECK(normal_form(parse_poly("z^2", xyz), cgb) == parse_poly("z^2", xyz));
  CHECK(normal_form(parse_poly("x*y", xyz), cgb) == parse_poly("0 - z^2", xyz));
  CHECK(normal_form(parse_poly("1", xyz), cgb) == parse_poly("1", xyz));

  const auto gp = make_context({"x1", "x2", "x3", "x4", "x5"}, Field::rationals());
  const StandardBasis gsb = standard_monomials(buchberger(parse_all(kGasharovPeeva, gp)));
  CHECK(gsb.total == 12);
  CHECK(gsb.hilbert_function() == std::vector<std::size_t>{1, 5, 5, 1});
}

TEST_CASE("buchberger rejects bad input") {
  const auto xy = make_context({"x", "y"}, Field::rationals());
  CHECK_THROWS_WITH_AS(buchberger(parse_all({"x^2 + y"}, xy)), doctest::Contains("non-homogeneous"), ValidationError);
  CHECK_THROWS_WITH_AS(standard_monomials(buchberger(parse_all({"x^2", "x*y"}, xy))),
                       doctest::Contains("'y'"), ValidationError);
}

TEST_CASE("S-polynomial certificate and order independence") {
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    for (const auto& ideal : test_ideals()) {
      const auto ctx = make_context(ideal.vars, f);
      const auto gens = parse_all(ideal.gens, ctx);
      const GroebnerBasis a = buchberger(gens, MonomialOrder::degrevlex);
      const GroebnerBasis b = buchberger(gens, MonomialOrder::deglex);
      CHECK(verify_groebner(a));
      CHECK(verify_groebner(b));
      CHECK(standard_monomials(a).hilbert_function() == standard_monomials(b).hilbert_function());
      // Reduced: monic and no leading monomial divides a term of another generator.
      for (std::size_t i = 0; i < a.generators().size(); ++i) {
        CHECK(leading_term(a.generators()[i], a.order()).coefficient.is_one());
        for (std::size_t j = 0; j < a.generators().size(); ++j) {
          if (i == j) continue;
          for (const auto& [m, c] : a.generators()[j].terms()) CHECK_FALSE(a.leading_monomials()[i].divides(m));
        }
      }
      // Deterministic.
      CHECK(buchberger(gens).generators() == a.generators());
    }
  }
}

TEST_CASE("ideal membership of random combinations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const auto& ideal : test_ideals()) {
    const auto ctx = make_context(ideal.vars, Field::rationals());
    const auto gens = parse_all(ideal.gens, ctx);
    const GroebnerBasis gb = buchberger(gens);
    std::uniform_int_distribution<std::size_t> var(0, ideal.vars.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f(ctx);
      for (const auto& g : gens) {
        Polynomial c(ctx);
        for (int t = 0; t < 3; ++t) {
          Polynomial mono = Polynomial::constant(ctx, Scalar(Field::rationals(), static_cast<long>(coeff(rng))));
          for (int k = trial % 3; k > 0; --k) mono = mono * Polynomial::variable(ctx, var(rng));
          c += mono;
        }
        f += c * g;
      }
      REQUIRE(normal_form(f, gb).is_zero());
      const Polynomial shifted = f + Polynomial::variable(ctx, var(rng));
      const Polynomial nf = normal_form(shifted, gb);
      REQUIRE_FALSE(nf.is_zero());
      REQUIRE(normal_form(nf, gb) == nf);
    }
  }
}

TEST_CASE("truncated basis agrees below the bound") {
  const auto ctx = make_context({"x1", "x2", "x3", "x4", "x5"}, Field::rationals());
  const auto gens = parse_all(kGasharovPeeva, ctx);
  const GroebnerBasis full = buchberger(gens);
  const GroebnerBasis low = buchberger(gens, MonomialOrder::degrevlex, 2U);
  for (const auto& g : full.generators()) {
    if (g.terms().begin()->first.degree() <= 2) CHECK(normal_form(g, low).is_zero());
  }
}
