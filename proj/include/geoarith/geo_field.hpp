#pragma once

/**
 * @file geo_field.hpp
 * @brief The geometric real field R(G) = (0, inf) under the exponential generator.
 *
 * A GReal stands for the positive number e^t and is stored by its exponent t.
 * Every geometric operation is the classical operation applied to exponents:
 *
 *   x (+) y = x * y          exponent  tx + ty
 *   x (-) y = x / y          exponent  tx - ty
 *   x (*) y = x^{ln y}       exponent  tx * ty
 *   x (/) y = x^{1 / ln y}   exponent  tx / ty
 *
 * Geometric zero is e^0 = 1, geometric unity is e^1 = e. Ordering is the
 * exponent order, which coincides with the usual order of values.
 *
 * Only the exponential generator is implemented. All arithmetic on GReal goes
 * through the free functions below, so another generator would replace this
 * header and leave the rest of the library untouched.
 */

#include <compare>
#include <span>

namespace geoarith {

class GReal {
 public:
  /// Geometric zero (value 1).
  constexpr GReal() = default;

  /// Throws std::domain_error unless t is finite.
  static GReal from_exponent(double t);

  /// Throws std::domain_error unless v is finite and v > 0.
  static GReal from_value(double v);

  static constexpr GReal zero() { return GReal(0.0); }
  static constexpr GReal unity() { return GReal(1.0); }

  constexpr double exponent() const { return exponent_; }
  double value() const;

  constexpr bool is_zero() const { return exponent_ == 0.0; }

  friend constexpr bool operator==(GReal a, GReal b) {
    return a.exponent_ == b.exponent_;
  }
  friend constexpr std::partial_ordering operator<=>(GReal a, GReal b) {
    return a.exponent_ <=> b.exponent_;
  }

 private:
  constexpr explicit GReal(double t) : exponent_(t) {}

  double exponent_ = 0.0;
};

/// Comparison threshold in exponent units; x and y are geometrically equal
/// iff |tx - ty| <= tau. Corresponds to a geometric epsilon of e^tau.
class Tolerance {
 public:
  static constexpr double kDefaultTau = 1e-9;

  constexpr Tolerance() = default;
  /// Throws std::domain_error unless tau is finite and non-negative.
  explicit Tolerance(double tau);

  static constexpr Tolerance exact() { return Tolerance(Exact{}); }

  constexpr double tau() const { return tau_; }
  GReal epsilon() const { return GReal::from_exponent(tau_); }

  bool equal(GReal x, GReal y) const;
  /// x <= y within tolerance, i.e. tx <= ty + tau.
  bool less_equal(GReal x, GReal y) const;

 private:
  struct Exact {};
  constexpr explicit Tolerance(Exact) : tau_(0.0) {}

  double tau_ = kDefaultTau;
};

GReal gadd(GReal x, GReal y);
GReal gsub(GReal x, GReal y);
GReal gmul(GReal x, GReal y);
/// Throws std::domain_error when y is geometric zero or the quotient overflows.
GReal gdiv(GReal x, GReal y);

/// Additive inverse e^{-t}.
GReal gneg(GReal x);
/// Multiplicative inverse e^{1/t}; throws std::domain_error for geometric zero.
GReal ginv(GReal x);

/// |x|_G = e^{|t|}.
GReal gabs(GReal x);
/// d_G(x, y) = |x (-) y|_G.
GReal gdist(GReal x, GReal y);

/// Iterated geometric addition; the empty sum is geometric zero.
GReal gsum(std::span<const GReal> xs);

}  // namespace geoarith
