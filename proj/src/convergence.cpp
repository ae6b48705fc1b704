#include "geoarith/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geoarith {
namespace {

// Exponent threshold and comparison for the residual test of one mode.
struct ResidualBound {
  double limit;
  bool strict;

  bool admits(double residual) const { return strict ? residual < limit : residual <= limit; }
};

ResidualBound residual_bound(const CheckOptions& opts) {
  if (opts.mode == CheckMode::exact) return {opts.tol.tau(), false};
  if (!opts.epsilon || opts.epsilon->exponent() <= 0.0) {
    throw std::domain_error("epsilon mode requires a geometric epsilon > e^0");
  }
  return {opts.epsilon->exponent(), true};
}

double witness_residual(std::span<const GReal> terms, Index n) {
  double worst = 0.0;
  for (Index m = 1; m <= terms.size(); ++m) {
    const double r = std::abs(terms[m - 1].exponent() - terms[gcd(m, n) - 1].exponent());
    worst = std::max(worst, r);
  }
  return worst;
}

void validate_chain(const GSeq& f, std::span<const Index> chain) {
  if (chain.empty()) throw std::domain_error("chain must be non-empty");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k] == 0 || chain[k] > f.size()) {
      throw std::domain_error("chain entry " + std::to_string(chain[k]) + " outside 1.." +
                              std::to_string(f.size()));
    }
    if (k > 0 && chain[k] % chain[k - 1] != 0) {
      throw std::domain_error("chain breaks divisibility: " + std::to_string(chain[k - 1]) +
                              " does not divide " + std::to_string(chain[k]));
    }
  }
}

ChainReport make_chain_report(std::span<const Index> chain, std::vector<GReal> extracted,
                              Tolerance tol) {
  GSeq seq(std::move(extracted));
  const bool cauchy = is_g_cauchy(seq, tol);
  const auto limit = cauchy ? std::optional<GReal>(seq.at(seq.size())) : std::nullopt;
  return ChainReport{{chain.begin(), chain.end()}, std::move(seq), cauchy, limit};
}

}  // namespace

std::string_view to_string(Space space) {
  switch (space) {
    case Space::AC: return "AC";
    case Space::AS: return "AS";
    case Space::PHI: return "PHI";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::consistent ? "consistent" : "refuted";
}

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::exact ? "exact" : "epsilon";
}

Index cauchy_tail_length(Index length) {
  if (length <= 2) return length;
  return std::max<Index>(2, (length + 1) / 2);
}

bool is_g_cauchy(const GSeq& f, Tolerance tol) {
  const auto terms = f.terms();
  const auto tail = terms.subspan(terms.size() - cauchy_tail_length(terms.size()));
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  return hi->exponent() - lo->exponent() <= tol.tau();
}

std::optional<GReal> g_limit(const GSeq& f, Tolerance tol) {
  if (!is_g_cauchy(f, tol)) return std::nullopt;
  return f.at(f.size());
}

MembershipReport check_arith_convergent(const GSeq& g, const CheckOptions& opts) {
  const ResidualBound bound = residual_bound(opts);
  const Index n_max = std::min(g.size(), opts.witness_cap.value_or(g.size()));

  MembershipReport report;
  report.space = Space::AC;
  report.prefix_length = g.size();
  report.mode = opts.mode;
  if (opts.mode == CheckMode::epsilon) report.epsilon = opts.epsilon;

  double best = INFINITY;
  for (Index n = 1; n <= n_max; ++n) {
    const double residual = witness_residual(g.terms(), n);
    if (bound.admits(residual)) {
      report.verdict = Verdict::consistent;
      report.witness = n;
      report.max_residual = GReal::from_exponent(residual);
      return report;
    }
    best = std::min(best, residual);
  }
  report.verdict = Verdict::refuted;
  if (std::isfinite(best)) report.max_residual = GReal::from_exponent(best);
  return report;
}

MembershipReport check_arith_summable(const GSeq& f, const CheckOptions& opts) {
  MembershipReport report = check_arith_convergent(w_transform(f), opts);
  report.space = Space::AS;
  return report;
}

MembershipReport classify_eventually_zero(const GSeq& f, Tolerance tol) {
  const auto terms = f.terms();
  Index last_nonzero = 0;
  for (Index i = terms.size(); i >= 1; --i) {
    if (!tol.equal(terms[i - 1], GReal::zero())) {
      last_nonzero = i;
      break;
    }
  }
  double tail = 0.0;
  for (Index i = last_nonzero + 1; i <= terms.size(); ++i) {
    tail = std::max(tail, std::abs(terms[i - 1].exponent()));
  }
  MembershipReport report;
  report.space = Space::PHI;
  report.verdict = Verdict::consistent;
  report.witness = last_nonzero;
  report.max_residual = GReal::from_exponent(tail);
  report.prefix_length = f.size();
  report.mode = CheckMode::exact;
  return report;
}

ChainReport chain_extract(const GSeq& f, std::span<const Index> chain, Tolerance tol) {
  validate_chain(f, chain);
  std::vector<GReal> extracted;
  extracted.reserve(chain.size());
  for (Index n : chain) extracted.push_back(f.at(n));
  return make_chain_report(chain, std::move(extracted), tol);
}

ChainReport summable_chain_extract(const GSeq& f, std::span<const Index> chain, Tolerance tol) {
  validate_chain(f, chain);
  std::vector<GReal> extracted;
  extracted.reserve(chain.size());
  for (Index n : chain) {
    std::vector<GReal> terms;
    for (Index d : divisors(n)) terms.push_back(f.at(d));
    extracted.push_back(gsum(terms));
  }
  return make_chain_report(chain, std::move(extracted), tol);
}

MembershipReport linear_combine_check(const GSeq& f, const GSeq& g, GReal a, GReal b,
                                      Space target, const CheckOptions& opts) {
  if (f.size() != g.size()) throw std::domain_error("linear_combine_check: length mismatch");
  std::vector<GReal> h;
  h.reserve(f.size());
  for (Index i = 1; i <= f.size(); ++i) {
    h.push_back(gadd(gmul(a, f.at(i)), gmul(b, g.at(i))));
  }
  const GSeq combined(std::move(h));
  switch (target) {
    case Space::AC: return check_arith_convergent(combined, opts);
    case Space::AS: return check_arith_summable(combined, opts);
    case Space::PHI: break;
  }
  throw std::domain_error("linear_combine_check targets AC or AS");
}

}  // namespace geoarith
