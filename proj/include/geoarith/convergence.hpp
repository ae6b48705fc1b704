#pragma once

// Membership checks for finite prefixes against the sequence spaces
//
//   AC(G)  arithmetically convergent:  g(m) = g(<m, n>) for all m, some witness n
//   AS(G)  arithmetically summable:    the divisor-sum transform Wf is in AC(G)
//   PHI    eventually geometric zero
//
// plus the geometric Cauchy test and divisor-chain extraction.
//
// A "consistent" verdict only says that no counterexample exists among
// m <= N. Reports carry the prefix length to make that explicit.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geoarith/divisor_arith.hpp"
#include "geoarith/geo_field.hpp"
#include "geoarith/seq_transforms.hpp"

namespace geoarith {

enum class Space { AC, AS, PHI };
enum class Verdict { consistent, refuted };

/// exact: residual must be geometric zero within a Tolerance.
/// epsilon: residual must be strictly below a geometric epsilon > e^0.
enum class CheckMode { exact, epsilon };

std::string_view to_string(Space space);
std::string_view to_string(Verdict verdict);
std::string_view to_string(CheckMode mode);

struct CheckOptions {
  CheckMode mode = CheckMode::exact;
  Tolerance tol{};
  std::optional<GReal> epsilon;
  /// Largest witness tried; defaults to the prefix length.
  std::optional<Index> witness_cap;
};

struct MembershipReport {
  Space space = Space::AC;
  Verdict verdict = Verdict::refuted;
  std::optional<Index> witness;
  /// Largest residual for the reported witness, or for the best candidate
  /// when refuted.
  GReal max_residual;
  Index prefix_length = 0;
  CheckMode mode = CheckMode::exact;
  std::optional<GReal> epsilon;

  bool consistent() const { return verdict == Verdict::consistent; }
};

struct ChainReport {
  std::vector<Index> chain;
  GSeq extracted;
  bool is_cauchy = false;
  std::optional<GReal> limit;
};

/// Number of trailing terms that must agree pairwise for a prefix of the
/// given length to count as geometric Cauchy: the later half, never fewer
/// than two terms when two exist.
Index cauchy_tail_length(Index length);

/// True iff the last cauchy_tail_length(N) terms lie pairwise within e^tau
/// of each other under d_G.
bool is_g_cauchy(const GSeq& f, Tolerance tol = Tolerance{});

/// The final term when is_g_cauchy holds, otherwise nothing.
std::optional<GReal> g_limit(const GSeq& f, Tolerance tol = Tolerance{});

/// Smallest witness n in 1..min(N, witness_cap) with
/// |g(m) (-) g(<m, n>)|_G within tolerance for every m <= N.
/// Throws std::domain_error in epsilon mode without an epsilon > e^0.
MembershipReport check_arith_convergent(const GSeq& g, const CheckOptions& opts = {});

/// check_arith_convergent applied to w_transform(f), tagged AS.
MembershipReport check_arith_summable(const GSeq& f, const CheckOptions& opts = {});

/// PHI classification. The witness is the last index whose term is not
/// geometric zero within tol (0 if there is none); always consistent.
MembershipReport classify_eventually_zero(const GSeq& f, Tolerance tol = Tolerance{});

/// extracted(k) = f(n_k). Throws std::domain_error when the chain is empty,
/// breaks divisibility or leaves 1..N.
ChainReport chain_extract(const GSeq& f, std::span<const Index> chain,
                          Tolerance tol = Tolerance{});

/// extracted(k) = geometric sum of f(d) over d | n_k. Same preconditions.
ChainReport summable_chain_extract(const GSeq& f, std::span<const Index> chain,
                                   Tolerance tol = Tolerance{});

/// Membership check of h(i) = a (*) f(i) (+) b (*) g(i) in the target space
/// (AC or AS). Throws std::domain_error on a length mismatch or for PHI.
MembershipReport linear_combine_check(const GSeq& f, const GSeq& g, GReal a, GReal b,
                                      Space target, const CheckOptions& opts = {});

}  // namespace geoarith
