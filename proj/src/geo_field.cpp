#include "geoarith/geo_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace geoarith {

GReal GReal::from_exponent(double t) {
  if (!std::isfinite(t)) {
    throw std::domain_error("geometric real requires a finite exponent");
  }
  return GReal(t);
}

GReal GReal::from_value(double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error("geometric real requires a finite positive value, got " +
                            std::to_string(v));
  }
  return GReal(std::log(v));
}

double GReal::value() const { return std::exp(exponent_); }

Tolerance::Tolerance(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::domain_error("tolerance must be finite and non-negative");
  }
}

bool Tolerance::equal(GReal x, GReal y) const {
  return std::abs(x.exponent() - y.exponent()) <= tau_;
}

bool Tolerance::less_equal(GReal x, GReal y) const {
  return x.exponent() <= y.exponent() + tau_;
}

GReal gadd(GReal x, GReal y) { return GReal::from_exponent(x.exponent() + y.exponent()); }

GReal gsub(GReal x, GReal y) { return GReal::from_exponent(x.exponent() - y.exponent()); }

GReal gmul(GReal x, GReal y) { return GReal::from_exponent(x.exponent() * y.exponent()); }

GReal gdiv(GReal x, GReal y) {
  if (y.is_zero()) {
    throw std::domain_error("geometric division by geometric zero");
  }
  return GReal::from_exponent(x.exponent() / y.exponent());
}

GReal gneg(GReal x) { return GReal::from_exponent(-x.exponent()); }

GReal ginv(GReal x) { return gdiv(GReal::unity(), x); }

GReal gabs(GReal x) { return GReal::from_exponent(std::abs(x.exponent())); }

GReal gdist(GReal x, GReal y) { return gabs(gsub(x, y)); }

GReal gsum(std::span<const GReal> xs) {
  double t = 0.0;
  for (GReal x : xs) {
    t += x.exponent();
  }
  return GReal::from_exponent(t);
}

}  // namespace geoarith
