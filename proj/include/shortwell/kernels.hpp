#pragma once

#include <cstddef>
#include <string>

#include "shortwell/series.hpp"

namespace shortwell {

/// Entire functions of z used to recast the quantization conditions so
/// that no square root of the expansion variable survives.
enum class Kernel {
  cos_sqrt,     // cos(sqrt z)
  sinc_sqrt,    // sin(sqrt z)/sqrt z
  cosh_sqrt,    // cosh(sqrt z)
  sinhc_sqrt,   // sinh(sqrt z)/sqrt z
  tan_sq_sqrt,  // tan^2(sqrt z)
  sqrtcoth,     // sqrt z * coth(sqrt z)
  exp,          // e^z
  sqrt1p,       // sqrt(1 + z)
};

inline constexpr std::size_t kMaxSeriesOrder = 200;

/// Taylor coefficients of `kind` about z = 0 through `order` (<= 200),
/// exact in the rational domain.
RationalSeries kernel_series(Kernel kind, std::size_t order, const std::string& variable = "z");

template <class T>
TruncatedSeries<T> kernel_series_as(Kernel kind, std::size_t order, const std::string& variable = "z") {
  if constexpr (std::is_same_v<T, double>) {
    return kernel_series(kind, order, variable).to_float();
  } else {
    return kernel_series(kind, order, variable);
  }
}

/// kind(inner(x)) for a nilpotent inner series.
template <class T>
TruncatedSeries<T> apply_kernel(Kernel kind, const TruncatedSeries<T>& inner) {
  return compose(kernel_series_as<T>(kind, inner.order(), inner.variable()), inner);
}

// Pointwise kernels, analytically continued to negative arguments
// (e.g. tan^2(sqrt z) = -tanh^2(sqrt(-z)) for z < 0).
double cos_sqrt(double z);
double sinc_sqrt(double z);
double cosh_sqrt(double z);
double sinhc_sqrt(double z);
double tan_sq_sqrt(double z);
double sqrtcoth(double z);

// Float-domain elementary functions of series with arbitrary constant term.
FloatSeries exp(const FloatSeries& a);
FloatSeries cosh(const FloatSeries& a);
FloatSeries sinh(const FloatSeries& a);
/// Requires a_0 > 0.
FloatSeries sqrt(const FloatSeries& a);

}  // namespace shortwell
