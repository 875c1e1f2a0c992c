#include <doctest.h>

#include <cstdlib>

#include "golodkit/error.hpp"
#include "golodkit/homology/koszul.hpp"
#include "golodkit/homology/resolution.hpp"
#include "golodkit/homology/tor.hpp"
#include "support/test_rings.hpp"

using namespace golodkit;
using namespace testrings;

namespace {

std::vector<std::size_t> betti(const ModulePresentation& m, unsigned n, Execution ex = Execution::parallel) {
  ResolveOptions opt;
  opt.execution = ex;
  const Resolution res = resolve(m, n, opt);
  REQUIRE_FALSE(res.prefix.budget_exceeded);
  return res.betti.totals();
}

// a_n = 3 a_{n-1} - a_{n-2}: coefficients of 1/(1 - 3t + t^2).
std::vector<std::size_t> fibonacci_even(std::size_t n) {
  std::vector<std::size_t> a{1, 3};
  while (a.size() <= n) a.push_back(3 * a[a.size() - 1] - a[a.size() - 2]);
  a.resize(n + 1);
  return a;
}

}  // namespace

TEST_CASE("resolve examples") {
  SUBCASE("k over (x,y)^2 has beta_n = 2^n") {
    const auto b = betti(residue(square_of_max()), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(b[n] == (std::size_t{1} << n));
  }
  SUBCASE("compressed ring") { CHECK(betti(residue(compressed()), 5) == fibonacci_even(5)); }
  SUBCASE("ring S") {
    const auto b = betti(residue(ring_s()), 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(b[n] == (std::size_t{1} << (n + 2)) - (n + 3));
  }
  SUBCASE("free module") {
    const auto b = betti(ModulePresentation::free_module(compressed()), 3);
    CHECK(b == std::vector<std::size_t>{1, 0, 0, 0});
  }
}

TEST_CASE("graded Betti numbers of k over a Koszul ring are linear") {
  const Resolution res = resolve(residue(ring_s()), 4);
  for (std::size_t i = 0; i < res.betti.graded.size(); ++i) {
    REQUIRE(res.betti.graded[i].size() == 1);
    CHECK(res.betti.graded[i].begin()->first == static_cast<int>(i));
  }
}

TEST_CASE("koszul homology examples") {
  CHECK(koszul_homology(*square_of_max()).ranks == std::vector<std::size_t>{1, 3, 2});
  CHECK(koszul_homology(*ring({"x"}, {"x^2"})).ranks == std::vector<std::size_t>{1, 1});
  CHECK(koszul_homology(*compressed()).ranks == std::vector<std::size_t>{1, 5, 5, 1});
  CHECK(koszul_homology(*gasharov_peeva()).ranks.front() == 1);
  for (const auto& r : {square_of_max(), compressed(), ring_s(), gasharov_peeva(), stretched()}) {
    const auto h = koszul_homology(*r).ranks;
    long euler = 0;
    for (std::size_t i = 0; i < h.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(h[i]);
    CHECK(euler == 0);
  }
}

TEST_CASE("tor examples over S") {
  const auto s = ring_s();
  const auto m = quotient(s, {"z"});
  const TorResult a = tor(m, quotient(s, {"w"}), 8);
  REQUIRE(a.dims.size() == 9);
  CHECK(a.dims[0] == 3);  // S/(z, w) has length 3
  for (std::size_t i = 1; i <= 8; ++i) CHECK(a.dims[i] == 0);

  const TorResult b = tor(m, quotient(s, {"x", "y"}), 8);
  REQUIRE(b.dims.size() == 9);
  CHECK(b.dims[0] == 2);
  for (std::size_t i = 1; i <= 8; ++i) CHECK(b.dims[i] == 0);

  const TorResult c = tor(quotient(s, {"x", "y"}), ModulePresentation::free_module(s), 4);
  CHECK(c.dims[0] == 4);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(c.dims[i] == 0);
}

TEST_CASE("tor symmetry") {
  struct Triple {
    RingPtr r;
    std::vector<std::string> m, n;
  };
  const auto s = ring_s();
  const auto c = compressed();
  const auto q = square_of_max();
  const std::vector<Triple> triples = {
      {s, {"z"}, {"w"}},       {s, {"z"}, {"x", "y"}}, {s, {"w", "z"}, {"x"}},
      {c, {"x"}, {"y"}},       {c, {"z"}, {"x", "y"}}, {q, {"x"}, {"y"}},
  };
  for (const auto& t : triples) {
    const auto m = quotient(t.r, t.m);
    const auto n = quotient(t.r, t.n);
    CHECK(tor(m, n, 4).dims == tor(n, m, 4).dims);
  }
}

TEST_CASE("betti numbers equal dim Tor(M, k)") {
  const auto s = ring_s();
  for (const auto& m : {quotient(s, {"z"}), quotient(s, {"x", "y"}), quotient(s, {"w", "z"})}) {
    const auto b = betti(m, 8);
    const TorResult t = tor(m, residue(s), 8);
    CHECK(t.dims == b);
  }
}

TEST_CASE("exactness certificate") {
  for (const auto& m : {residue(compressed()), residue(ring_s()), quotient(ring_s(), {"x", "y"}),
                        quotient(gasharov_peeva(), {"x1"}), ModulePresentation::free_module(stretched())}) {
    const Resolution res = resolve(m, 3);
    const ExactnessCertificate cert = exactness_certificate(res.prefix, m);
    CHECK(cert.ok);
    CHECK_FALSE(cert.ledger.empty());
  }

  const auto m = residue(compressed());
  const Resolution res = resolve(m, 3);

  SUBCASE("unit entry breaks minimality") {
    ResolutionPrefix bad = res.prefix;
    bad.steps[2].differential[0].front().basis = 0;
    const ExactnessCertificate cert = exactness_certificate(bad, m);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.minimal);
  }
  SUBCASE("dropping a generator breaks the Euler ledger") {
    ResolutionPrefix bad = res.prefix;
    bad.steps.back().degrees.pop_back();
    bad.steps.back().differential.pop_back();
    const ExactnessCertificate cert = exactness_certificate(bad, m);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.euler_ok);
    CHECK(cert.offending_degree.has_value());
  }
  SUBCASE("a wrong last kernel breaks the ledger") {
    ResolutionPrefix bad = res.prefix;
    bad.last_kernel_dims.begin()->second += 1;
    CHECK_FALSE(exactness_certificate(bad, m).euler_ok);
  }
  SUBCASE("a perturbed entry breaks d o d = 0") {
    ResolutionPrefix bad = res.prefix;
    // Perturb an entry whose contribution b * d_1(e_g) is nonzero.
    bool mutated = false;
    for (auto& col : bad.steps[2].differential) {
      for (auto& e : col) {
        if (mutated || multiply(m.ring(), e.basis, bad.steps[1].differential[e.gen]).empty()) continue;
        e.coeff = e.coeff + Scalar(e.coeff.field(), 1L);
        mutated = true;
      }
    }
    REQUIRE(mutated);
    CHECK_FALSE(exactness_certificate(bad, m).composes_to_zero);
  }
}

TEST_CASE("serial and parallel resolutions are identical") {
  for (const auto& m : {residue(compressed()), residue(ring_s()), quotient(gasharov_peeva(), {"x1"})}) {
    ResolveOptions serial;
    serial.execution = Execution::serial;
    const Resolution a = resolve(m, 4, serial);
    const Resolution b = resolve(m, 4);
    REQUIRE(a.prefix.steps.size() == b.prefix.steps.size());
    for (std::size_t i = 0; i < a.prefix.steps.size(); ++i) {
      CHECK(a.prefix.steps[i].degrees == b.prefix.steps[i].degrees);
      CHECK(a.prefix.steps[i].differential == b.prefix.steps[i].differential);
    }
    CHECK(a.prefix.last_kernel_dims == b.prefix.last_kernel_dims);
  }
}

TEST_CASE("prime field agrees on the test rings") {
  const Field f = Field::prime(32003);
  CHECK(betti(residue(compressed(f)), 5) == betti(residue(compressed()), 5));
  CHECK(betti(residue(ring_s(f)), 4) == betti(residue(ring_s()), 4));
  CHECK(koszul_homology(*gasharov_peeva(f)).ranks == koszul_homology(*gasharov_peeva()).ranks);
}

TEST_CASE("matrix cap returns a partial result") {
  ResolveOptions opt;
  opt.max_columns = 40;
  const Resolution res = resolve(residue(square_of_max()), 10, opt);
  CHECK(res.prefix.budget_exceeded);
  CHECK(res.prefix.budget_message.find("cap of 40") != std::string::npos);
  CHECK(res.prefix.steps.size() < 11);
  const auto b = res.betti.totals();
  for (std::size_t n = 0; n < b.size(); ++n) CHECK(b[n] == (std::size_t{1} << n));
  // The partial prefix still carries a complete certificate.
  CHECK(exactness_certificate(res.prefix, residue(square_of_max())).ok);

  setenv("GOLODKIT_MAX_MATRIX", "123", 1);
  CHECK(default_matrix_cap() == 123);
  unsetenv("GOLODKIT_MAX_MATRIX");
  CHECK(default_matrix_cap() == 20000);
}

TEST_CASE("presentation validation") {
  const auto r = compressed();
  CHECK_THROWS_WITH_AS(ModulePresentation::quotient_by_ideal(r, {r->one()}), doctest::Contains("unit"), ValidationError);
  CHECK_THROWS_WITH_AS(ModulePresentation::quotient_by_ideal(r, {r->element("x + y^2")}),
                       doctest::Contains("homogeneous"), ValidationError);
  CHECK_THROWS_AS(ModulePresentation::from_matrix(r, {0, 1}, {{r->element("x"), r->element("x")}}), ValidationError);
  const auto ok = ModulePresentation::from_matrix(r, {0, 1}, {{r->element("x^2"), r->element("y")}});
  CHECK(ok.relation_degrees() == std::vector<int>{2});
  CHECK(module_hilbert(quotient(r, {"x"})) == std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 2}});
}
