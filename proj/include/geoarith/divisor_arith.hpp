#pragma once

// Index arithmetic (divisors, gcd, factorization) and the geometric-valued
// arithmetic functions built on it: the geometric Mobius function, the
// Dirichlet identity and unit, and Dirichlet convolution.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "geoarith/geo_field.hpp"

namespace geoarith {

/// A natural number argument, n >= 1 wherever an index is expected.
using Index = std::uint64_t;

inline constexpr Index kDefaultFactorBound = 10'000'000;

struct PrimePower {
  Index prime = 0;
  unsigned multiplicity = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// All divisors of n in increasing order, 1 and n included.
/// Throws std::domain_error for n == 0.
std::vector<Index> divisors(Index n);

/// Greatest common divisor <m, n>. Throws std::domain_error if either is 0.
Index gcd(Index m, Index n);

/// Trial division against a table of primes up to sqrt(bound).
class Factorizer {
 public:
  explicit Factorizer(Index bound = kDefaultFactorBound);

  /// Canonical factorization with ascending primes; empty for n == 1.
  /// Throws std::domain_error for n == 0 and CapacityError for n > bound().
  std::vector<PrimePower> factorize(Index n) const;

  Index bound() const { return bound_; }

 private:
  Index bound_;
  std::vector<Index> primes_;
};

/// Process-wide factorizer with the default bound.
const Factorizer& default_factorizer();

std::vector<PrimePower> factorize(Index n);

/// e for n = 1, e^{(-1)^k} for a product of k distinct primes, e^0 when a
/// square of a prime divides n. The exponent is always exactly -1, 0 or 1.
GReal mobius_g(Index n, const Factorizer& factorizer = default_factorizer());

/// e at n = 1, e^0 elsewhere.
GReal dirichlet_identity(Index n);

/// e everywhere.
GReal dirichlet_unit(Index n);

/// A deterministic rule N -> R(G) evaluable on 1..bound().
///
/// Values are memoized per instance. Copies share the cache, which is guarded
/// by a mutex, so concurrent evaluation is safe.
class ArithFn {
 public:
  using Rule = std::function<GReal(Index)>;

  ArithFn(Rule rule, Index bound);

  /// Tabulated function on 1..terms.size().
  static ArithFn from_terms(std::vector<GReal> terms);

  /// Throws std::domain_error for n == 0 and CapacityError for n > bound().
  GReal operator()(Index n) const;

  Index bound() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

ArithFn mobius_fn(const Factorizer& factorizer = default_factorizer());
ArithFn identity_fn(Index bound = kDefaultFactorBound);
ArithFn unit_fn(Index bound = kDefaultFactorBound);

/// (f * g)(n) = sum over k | n of f(n/k) (*) g(k), geometric sum and product.
/// Throws CapacityError when n exceeds either bound.
GReal dirichlet_convolve(const ArithFn& f, const ArithFn& g, Index n);

/// f * g as a function, bounded by the smaller of the two bounds.
ArithFn dirichlet_product(const ArithFn& f, const ArithFn& g);

/// Geometric sum of mobius_g over the divisors of n: e for n = 1, e^0 otherwise.
GReal divisor_mobius_sum(Index n, const Factorizer& factorizer = default_factorizer());

}  // namespace geoarith
