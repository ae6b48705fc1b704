#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "geoarith/divisor_arith.hpp"
#include "geoarith/errors.hpp"
#include "oracles.hpp"

using namespace geoarith;

namespace {

GReal ex(double t) { return GReal::from_exponent(t); }

ArithFn random_fn(std::mt19937_64& rng, Index bound) {
  std::vector<GReal> terms;
  for (double t : oracle::random_int_exponents(rng, bound)) terms.push_back(ex(t));
  return ArithFn::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Index>{1});
  CHECK(divisors(6) == std::vector<Index>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<Index>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<Index>{1, 7, 49});
  CHECK_THROWS_AS(divisors(0), std::domain_error);
  for (Index n = 1; n <= 500; ++n) CHECK(divisors(n) == oracle::divisors(n));
}

TEST_CASE("gcd") {
  CHECK(gcd(8, 12) == 4);
  CHECK(gcd(97, 1) == 1);
  CHECK(gcd(7, 7) == 7);
  CHECK_THROWS_AS(gcd(0, 3), std::domain_error);
  for (Index m = 1; m <= 60; ++m) {
    for (Index n = 1; n <= 60; ++n) CHECK(gcd(m, n) == oracle::gcd(m, n));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(30) == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(9'999'991) == std::vector<PrimePower>{{9'999'991, 1}});
  CHECK(factorize(10'000'000) == std::vector<PrimePower>{{2, 7}, {5, 7}});
  CHECK_THROWS_AS(factorize(10'000'001), CapacityError);
  const Factorizer small(100);
  CHECK(small.factorize(97) == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(small.factorize(101), CapacityError);
}

TEST_CASE("mobius_g") {
  CHECK(mobius_g(1) == GReal::unity());
  CHECK(mobius_g(4) == GReal::zero());
  CHECK(mobius_g(6) == GReal::unity());
  CHECK(mobius_g(30) == ex(-1));
  for (Index n = 1; n <= 2000; ++n) CHECK(mobius_g(n).exponent() == oracle::mobius(n));
  CHECK_THROWS_AS(mobius_g(Factorizer(50).bound() + 1, Factorizer(50)), CapacityError);
}

TEST_CASE("Dirichlet identity and unit") {
  CHECK(dirichlet_identity(1) == GReal::unity());
  CHECK(dirichlet_identity(2) == GReal::zero());
  CHECK(dirichlet_identity(100) == GReal::zero());
  CHECK(dirichlet_unit(1) == GReal::unity());
  CHECK(dirichlet_unit(7) == GReal::unity());
  CHECK(dirichlet_unit(1'000'000) == GReal::unity());
}

TEST_CASE("dirichlet_convolve examples") {
  const ArithFn mu = mobius_fn();
  const ArithFn unit = unit_fn();
  const ArithFn id = identity_fn();
  CHECK(dirichlet_convolve(unit, unit, 6) == ex(4));
  for (Index n = 1; n <= 300; ++n) {
    CHECK(dirichlet_convolve(unit, mu, n) == dirichlet_identity(n));
    CHECK(dirichlet_convolve(mu, unit, n) == dirichlet_identity(n));
  }
  std::mt19937_64 rng(11);
  const ArithFn f = random_fn(rng, 100);
  for (Index n = 1; n <= 100; ++n) {
    CHECK(dirichlet_convolve(f, id, n) == f(n));
    CHECK(dirichlet_convolve(id, f, n) == f(n));
  }
  CHECK_THROWS_AS(dirichlet_convolve(f, id, 101), CapacityError);
}

TEST_CASE("divisor_mobius_sum") {
  CHECK(divisor_mobius_sum(1) == GReal::unity());
  CHECK(divisor_mobius_sum(6) == GReal::zero());
  CHECK(divisor_mobius_sum(12) == GReal::zero());
}

TEST_CASE("property: convolution matches the exponent-domain oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto fe = oracle::random_real_exponents(rng, 128);
    const auto ge = oracle::random_real_exponents(rng, 128);
    std::vector<GReal> ft, gt;
    for (double t : fe) ft.push_back(ex(t));
    for (double t : ge) gt.push_back(ex(t));
    const ArithFn f = ArithFn::from_terms(ft), g = ArithFn::from_terms(gt);
    for (Index n = 1; n <= 128; ++n) {
      CHECK(dirichlet_convolve(f, g, n).exponent() ==
            doctest::Approx(oracle::dirichlet(fe, ge, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: dirichlet_product is associative and commutative on integer exponents") {
  std::mt19937_64 rng(5);
  const ArithFn f = random_fn(rng, 256), g = random_fn(rng, 256), h = random_fn(rng, 256);
  const ArithFn fg_h = dirichlet_product(dirichlet_product(f, g), h);
  const ArithFn f_gh = dirichlet_product(f, dirichlet_product(g, h));
  for (Index n = 1; n <= 256; ++n) {
    CHECK(dirichlet_convolve(f, g, n) == dirichlet_convolve(g, f, n));
    CHECK(fg_h(n) == f_gh(n));
  }
}

TEST_CASE("ArithFn memoization is deterministic under concurrent evaluation") {
  int calls = 0;
  const ArithFn counted([&calls](Index n) {
    ++calls;
    return GReal::from_exponent(static_cast<double>(n));
  }, 10);
  CHECK(counted(3) == ex(3));
  CHECK(counted(3) == ex(3));
  CHECK(calls == 1);
  CHECK_THROWS_AS(counted(11), CapacityError);
  CHECK_THROWS_AS(counted(0), std::domain_error);

  const ArithFn mu = mobius_fn();
  std::vector<std::vector<GReal>> results(4);
  std::vector<std::thread> workers;
  for (auto& out : results) {
    workers.emplace_back([&mu, &out] {
      for (Index n = 1; n <= 2000; ++n) out.push_back(mu(n));
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& out : results) CHECK(out == results.front());
}
