#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "geoarith/convergence.hpp"
#include "oracles.hpp"

using namespace geoarith;

namespace {

GSeq seq(std::vector<double> exponents) { return GSeq::from_exponents(exponents); }

GSeq alternating(Index n) {
  std::vector<double> t;
  for (Index i = 1; i <= n; ++i) t.push_back(i % 2 == 1 ? 1 : 2);
  return seq(t);
}

GSeq naturals(Index n) {
  std::vector<double> t;
  for (Index i = 1; i <= n; ++i) t.push_back(static_cast<double>(i));
  return seq(t);
}

GSeq two_ones(Index n) {
  std::vector<double> t(n, 0.0);
  t[0] = t[1] = 1;
  return seq(t);
}

const CheckOptions kExact{.tol = Tolerance::exact()};

CheckOptions epsilon_opts(double eps) {
  return {.mode = CheckMode::epsilon, .epsilon = GReal::from_exponent(eps)};
}

}  // namespace

TEST_CASE("cauchy tail length") {
  CHECK(cauchy_tail_length(1) == 1);
  CHECK(cauchy_tail_length(2) == 2);
  CHECK(cauchy_tail_length(4) == 2);
  CHECK(cauchy_tail_length(5) == 3);
  CHECK(cauchy_tail_length(100) == 50);
}

TEST_CASE("is_g_cauchy") {
  CHECK(is_g_cauchy(seq({2, 2, 2, 2})));
  CHECK_FALSE(is_g_cauchy(alternating(16)));
  std::vector<double> harmonic;
  for (int k = 1; k <= 100; ++k) harmonic.push_back(1.0 / k);
  // Tail k = 51..100 spans 1/51 - 1/100 = 0.0096.
  CHECK(is_g_cauchy(seq(harmonic), Tolerance(0.02)));
  CHECK_FALSE(is_g_cauchy(seq(harmonic), Tolerance(0.009)));
  CHECK(is_g_cauchy(seq({5})));
}

TEST_CASE("g_limit") {
  CHECK(g_limit(seq({2, 2, 2})) == GReal::from_exponent(2));
  CHECK_FALSE(g_limit(alternating(10)).has_value());
  std::vector<double> t;
  for (int k = 1; k <= 100; ++k) t.push_back(1.0 + 1.0 / k);
  const auto limit = g_limit(seq(t), Tolerance(0.02));
  REQUIRE(limit.has_value());
  CHECK(limit->exponent() == doctest::Approx(1.01));
}

TEST_CASE("check_arith_convergent examples") {
  const auto r = check_arith_convergent(alternating(12), kExact);
  CHECK(r.space == Space::AC);
  CHECK(r.consistent());
  CHECK(r.witness == 2);
  CHECK(r.max_residual == GReal::zero());
  CHECK(r.prefix_length == 12);

  std::mt19937_64 rng(1);
  for (Index n = 1; n <= 20; ++n) {
    const GSeq f = seq(oracle::random_real_exponents(rng, 30));
    CHECK(check_arith_convergent(q_transform(f, n), kExact).consistent());
  }

  REQUIRE(oracle::ac_witness(naturals(12).exponents()) == 0);
  const auto refuted = check_arith_convergent(naturals(12), kExact);
  CHECK_FALSE(refuted.consistent());
  CHECK_FALSE(refuted.witness.has_value());
  // Best witness is 12: only m = 5, 7, 9, 10, 11 mismatch; the worst is g(11) vs g(1).
  CHECK(refuted.max_residual == GReal::from_exponent(10));
}

TEST_CASE("length-1 prefixes are consistent with witness 1") {
  const GSeq one = seq({3.5});
  CHECK(check_arith_convergent(one).witness == 1);
  CHECK(check_arith_summable(one).witness == 1);
}

TEST_CASE("witness minimality matches the brute-force oracle") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Index> pick_n(1, 36);
  for (int trial = 0; trial < 60; ++trial) {
    const GSeq f = q_transform(seq(oracle::random_int_exponents(rng, 36, -2, 2)), pick_n(rng));
    const auto report = check_arith_convergent(f, kExact);
    const Index expected = oracle::ac_witness(f.exponents());
    REQUIRE(report.consistent());
    CHECK(*report.witness == expected);
    CHECK(check_arith_convergent(f, {.tol = Tolerance::exact(), .witness_cap = expected}).witness ==
          expected);
    if (expected > 1) {
      CHECK_FALSE(
          check_arith_convergent(f, {.tol = Tolerance::exact(), .witness_cap = expected - 1})
              .consistent());
    }
  }
}

TEST_CASE("epsilon mode") {
  CHECK_THROWS_AS(check_arith_convergent(naturals(4), {.mode = CheckMode::epsilon}),
                  std::domain_error);
  CHECK_THROWS_AS(check_arith_convergent(naturals(4), epsilon_opts(0.0)), std::domain_error);

  // Perturb an AC sequence off the witness structure by 0.05.
  auto t = q_transform(naturals(24), 6).exponents();
  t[6] += 0.05;
  const GSeq f = seq(t);
  CHECK_FALSE(check_arith_convergent(f, kExact).consistent());
  CHECK_FALSE(check_arith_convergent(f, epsilon_opts(0.05)).consistent());
  const auto loose = check_arith_convergent(f, epsilon_opts(0.0500001));
  CHECK(loose.consistent());
  CHECK(loose.witness == 6);
  CHECK(loose.epsilon == GReal::from_exponent(0.0500001));
  for (double eps : {0.06, 0.5, 3.0}) {
    const auto r = check_arith_convergent(f, epsilon_opts(eps));
    CHECK(r.consistent());
    CHECK(*r.witness <= 6);
  }
  // Exact-consistent sequences are epsilon-consistent for every epsilon > 0.
  for (double eps : {1e-12, 1e-3, 1.0}) {
    CHECK(check_arith_convergent(alternating(12), epsilon_opts(eps)).witness == 2);
  }
}

TEST_CASE("check_arith_summable examples") {
  const auto r = check_arith_summable(two_ones(12), kExact);
  CHECK(r.space == Space::AS);
  CHECK(r.consistent());
  CHECK(r.witness == 2);

  // Eventually-zero prefixes are certified when the lcm of their support
  // (the infinite-sequence witness) lies inside the search range 1..N.
  std::mt19937_64 rng(3);
  for (Index n = 1; n <= 4; ++n) {
    auto t = oracle::random_int_exponents(rng, 40);
    for (std::size_t i = n; i < t.size(); ++i) t[i] = 0;
    const auto r = check_arith_summable(seq(t), kExact);
    CHECK(r.consistent());
    CHECK(*r.witness <= 12);
  }
  for (Index n = 1; n <= 40; ++n) {
    const auto r = check_arith_summable(r_transform(seq(oracle::random_int_exponents(rng, 40)), n), kExact);
    CHECK(r.consistent());
    CHECK(*r.witness <= n);
  }
  // Support {1..6} needs witness lcm(1..6) = 60 > N = 40.
  std::vector<double> wide(40, 0.0);
  for (int i = 0; i < 6; ++i) wide[i] = 1;
  CHECK_FALSE(check_arith_summable(seq(wide), kExact).consistent());
  CHECK(check_arith_summable(seq(wide), kExact).prefix_length == 40);

  const auto refuted = check_arith_summable(naturals(12), kExact);
  CHECK_FALSE(refuted.consistent());
  REQUIRE(oracle::ac_witness(oracle::divisor_sums(naturals(12).exponents())) == 0);
}

TEST_CASE("AS is AC of the divisor-sum transform") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const GSeq f = trial % 2 == 0 ? seq(oracle::random_int_exponents(rng, 48))
                                  : m_transform(q_transform(seq(oracle::random_int_exponents(rng, 48)), trial));
    const auto as = check_arith_summable(f, kExact);
    const auto ac = check_arith_convergent(w_transform(f), kExact);
    CHECK(as.verdict == ac.verdict);
    CHECK(as.witness == ac.witness);
    CHECK(as.max_residual == ac.max_residual);
  }
}

TEST_CASE("classify_eventually_zero") {
  const auto r = classify_eventually_zero(seq({1, 1, 0, 0, 0}));
  CHECK(r.space == Space::PHI);
  CHECK(r.consistent());
  CHECK(r.witness == 2);
  CHECK(classify_eventually_zero(GSeq::zeros(9)).witness == 0);
  for (Index n = 1; n <= 30; ++n) {
    CHECK(*classify_eventually_zero(r_transform(naturals(40), n)).witness <= n);
  }
  CHECK(classify_eventually_zero(seq({1, 1e-12}), Tolerance(1e-9)).witness == 1);
  CHECK(classify_eventually_zero(seq({1, 1e-12}), Tolerance::exact()).witness == 2);
}

TEST_CASE("chain_extract") {
  const std::vector<Index> chain{2, 4, 8, 16};
  const auto r = chain_extract(alternating(16), chain);
  CHECK(r.extracted == seq({2, 2, 2, 2}));
  CHECK(r.is_cauchy);
  CHECK(r.limit == GReal::from_exponent(2));

  const GSeq constant = seq(std::vector<double>(20, 1.5));
  const std::vector<Index> other{1, 3, 6, 18};
  CHECK(chain_extract(constant, other).limit == constant.at(1));

  const std::vector<Index> broken{2, 3};
  CHECK_THROWS_AS(chain_extract(alternating(16), broken), std::domain_error);
  const std::vector<Index> out_of_range{4, 32};
  CHECK_THROWS_AS(chain_extract(alternating(16), out_of_range), std::domain_error);
  CHECK_THROWS_AS(chain_extract(alternating(16), std::vector<Index>{}), std::domain_error);

  const std::vector<Index> growing{1, 2, 4, 8, 16};
  CHECK_FALSE(chain_extract(naturals(16), growing).is_cauchy);
}

TEST_CASE("summable_chain_extract") {
  const std::vector<Index> chain{2, 4, 8, 16};
  const auto r = summable_chain_extract(two_ones(16), chain);
  CHECK(r.extracted == seq({2, 2, 2, 2}));
  CHECK(r.limit == GReal::from_exponent(2));

  CHECK(summable_chain_extract(GSeq::zeros(16), chain).limit == GReal::zero());

  const std::vector<Index> short_chain{2, 4, 8};
  const auto mu = summable_chain_extract(GSeq::tabulate(mobius_fn(), 16), short_chain);
  CHECK(mu.extracted == seq({0, 0, 0}));
  CHECK(mu.limit == GReal::zero());
}

TEST_CASE("property: chains through AC sequences stabilise with gcd(witness, n_k)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Index witness = 1 + trial % 24;
    const GSeq f = q_transform(seq(oracle::random_int_exponents(rng, 96)), witness);
    const auto report = check_arith_convergent(f, kExact);
    REQUIRE(report.consistent());
    const auto chain = oracle::random_chain(rng, 96);
    const auto r = chain_extract(f, chain, Tolerance::exact());
    CHECK(r.is_cauchy);
    // Terms agree once gcd(witness, n_k) stops changing.
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (oracle::gcd(*report.witness, chain[k]) == oracle::gcd(*report.witness, chain.back())) {
        CHECK(r.extracted.at(k + 1) == r.extracted.at(chain.size()));
      }
    }
  }
}

TEST_CASE("linear_combine_check") {
  const GSeq alt = alternating(12);
  const auto r = linear_combine_check(alt, alt, GReal::unity(), GReal::unity(), Space::AC, kExact);
  CHECK(r.consistent());
  CHECK(r.witness == 2);

  const auto zero = linear_combine_check(naturals(12), alt, GReal::zero(), GReal::zero(), Space::AC);
  CHECK(zero.witness == 1);

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> scalar(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const GSeq u = q_transform(seq(oracle::random_real_exponents(rng, 36)), 6);
    const GSeq v = q_transform(seq(oracle::random_real_exponents(rng, 36)), 6);
    const GReal a = GReal::from_exponent(scalar(rng)), b = GReal::from_exponent(scalar(rng));
    const auto c = linear_combine_check(u, v, a, b, Space::AC, kExact);
    CHECK(c.consistent());
    CHECK(*c.witness <= 6);
  }
  CHECK_THROWS_AS(linear_combine_check(alt, naturals(5), GReal::unity(), GReal::unity(), Space::AC),
                  std::domain_error);
  CHECK_THROWS_AS(linear_combine_check(alt, alt, GReal::unity(), GReal::unity(), Space::PHI),
                  std::domain_error);
}
