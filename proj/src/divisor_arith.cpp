#include "geoarith/divisor_arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "geoarith/errors.hpp"

namespace geoarith {
namespace {

void require_index(Index n, const char* what) {
  if (n == 0) {
    throw std::domain_error(std::string(what) + ": index must be >= 1");
  }
}

Index isqrt(Index n) {
  auto r = static_cast<Index>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<Index> divisors(Index n) {
  require_index(n, "divisors");
  std::vector<Index> small;
  std::vector<Index> large;
  for (Index d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Index gcd(Index m, Index n) {
  require_index(m, "gcd");
  require_index(n, "gcd");
  return std::gcd(m, n);
}

Factorizer::Factorizer(Index bound) : bound_(bound) {
  if (bound == 0) {
    throw std::domain_error("factorization bound must be >= 1");
  }
  const Index limit = isqrt(bound);
  std::vector<bool> composite(limit + 1, false);
  for (Index p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes_.push_back(p);
    for (Index q = p * p; q <= limit; q += p) composite[q] = true;
  }
}

std::vector<PrimePower> Factorizer::factorize(Index n) const {
  require_index(n, "factorize");
  if (n > bound_) {
    throw CapacityError("factorize: " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound_));
  }
  std::vector<PrimePower> result;
  for (Index p : primes_) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    result.push_back({p, k});
  }
  // Whatever survives trial division up to sqrt is a single prime.
  if (n > 1) result.push_back({n, 1});
  return result;
}

const Factorizer& default_factorizer() {
  static const Factorizer instance;
  return instance;
}

std::vector<PrimePower> factorize(Index n) { return default_factorizer().factorize(n); }

GReal mobius_g(Index n, const Factorizer& factorizer) {
  const auto factors = factorizer.factorize(n);
  for (const auto& pp : factors) {
    if (pp.multiplicity > 1) return GReal::zero();
  }
  return factors.size() % 2 == 0 ? GReal::unity() : gneg(GReal::unity());
}

GReal dirichlet_identity(Index n) {
  require_index(n, "dirichlet_identity");
  return n == 1 ? GReal::unity() : GReal::zero();
}

GReal dirichlet_unit(Index n) {
  require_index(n, "dirichlet_unit");
  return GReal::unity();
}

struct ArithFn::State {
  Rule rule;
  Index bound;
  std::mutex mutex;
  std::unordered_map<Index, GReal> cache;
};

ArithFn::ArithFn(Rule rule, Index bound) : state_(std::make_shared<State>()) {
  if (!rule) throw std::invalid_argument("ArithFn requires a rule");
  state_->rule = std::move(rule);
  state_->bound = bound;
}

ArithFn ArithFn::from_terms(std::vector<GReal> terms) {
  const Index bound = terms.size();
  return ArithFn([terms = std::move(terms)](Index n) { return terms[n - 1]; }, bound);
}

GReal ArithFn::operator()(Index n) const {
  require_index(n, "arithmetic function");
  if (n > state_->bound) {
    throw CapacityError("arithmetic function evaluated at " + std::to_string(n) +
                        " beyond bound " + std::to_string(state_->bound));
  }
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->cache.find(n); it != state_->cache.end()) return it->second;
  }
  // The rule runs unlocked so that rules which evaluate other ArithFns (or
  // this one) cannot deadlock; a racing duplicate computes the same value.
  const GReal value = state_->rule(n);
  std::lock_guard lock(state_->mutex);
  state_->cache.emplace(n, value);
  return value;
}

Index ArithFn::bound() const { return state_->bound; }

ArithFn mobius_fn(const Factorizer& factorizer) {
  return ArithFn([factorizer](Index n) { return mobius_g(n, factorizer); }, factorizer.bound());
}

ArithFn identity_fn(Index bound) { return ArithFn(dirichlet_identity, bound); }

ArithFn unit_fn(Index bound) { return ArithFn(dirichlet_unit, bound); }

GReal dirichlet_convolve(const ArithFn& f, const ArithFn& g, Index n) {
  require_index(n, "dirichlet_convolve");
  if (n > f.bound() || n > g.bound()) {
    throw CapacityError("dirichlet_convolve: index " + std::to_string(n) +
                        " exceeds a function bound");
  }
  double t = 0.0;
  for (Index k : divisors(n)) {
    t += gmul(f(n / k), g(k)).exponent();
  }
  return GReal::from_exponent(t);
}

ArithFn dirichlet_product(const ArithFn& f, const ArithFn& g) {
  return ArithFn([f, g](Index n) { return dirichlet_convolve(f, g, n); },
                 std::min(f.bound(), g.bound()));
}

GReal divisor_mobius_sum(Index n, const Factorizer& factorizer) {
  std::vector<GReal> terms;
  for (Index k : divisors(n)) terms.push_back(mobius_g(k, factorizer));
  return gsum(terms);
}

}  // namespace geoarith
