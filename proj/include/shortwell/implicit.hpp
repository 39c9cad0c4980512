#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>

#include "shortwell/series.hpp"

namespace shortwell {

/// An implicit relation F(y, lambda) = 0 analytic at (y0, 0), seen through
/// substitution: given a candidate series y(lambda) it returns F(y(lambda),
/// lambda) and dF/dy(y(lambda), lambda) as series in lambda.
template <class T>
struct SeriesRelation {
  std::function<TruncatedSeries<T>(const TruncatedSeries<T>&)> value;
  std::function<TruncatedSeries<T>(const TruncatedSeries<T>&)> derivative;
  T expansion_point = T(0);   // y(0)
  std::size_t leading_order = 1;  // first order at which y - y0 is nonzero
  std::string variable = "lambda";
};

/// Solves F(y(lambda), lambda) = 0 through `order` by Newton's method in the
/// truncated ring, y <- y - F(y)/F_y(y), starting from y = y0.
///
/// Throws NumericalError("implicit function theorem violated") if
/// F_y(y0, 0) vanishes and NumericalError("divergent iteration") if no fixed
/// point is reached within floor(log2 N) + 4 iterations.
template <class T>
TruncatedSeries<T> newton_implicit_series(const SeriesRelation<T>& rel, std::size_t order) {
  if (order < rel.leading_order) throw InvalidInput("order below the declared leading order");
  using Series = TruncatedSeries<T>;
  Series y = Series::constant(rel.variable, order, rel.expansion_point);

  const T slope = rel.derivative(y)[0];
  if constexpr (std::is_same_v<T, double>) {
    if (!(std::abs(slope) > 1e-12)) throw NumericalError("implicit function theorem violated");
  } else {
    if (slope == T(0)) throw NumericalError("implicit function theorem violated");
  }

  int cap = 4;
  for (std::size_t n = order; n > 1; n /= 2) ++cap;

  for (int iter = 0; iter < cap; ++iter) {
    const Series step = rel.value(y) / rel.derivative(y);
    y -= step;
    if constexpr (std::is_same_v<T, double>) {
      double step_max = 0.0;
      double y_max = 1.0;
      for (std::size_t k = 0; k <= order; ++k) {
        step_max = std::max(step_max, std::abs(step[k]));
        y_max = std::max(y_max, std::abs(y[k]));
      }
      if (!std::isfinite(step_max)) throw NumericalError("precision exhausted");
      if (step_max <= 1e-14 * y_max) return y;
    } else {
      if (step.is_zero()) return y;
    }
  }
  throw NumericalError("divergent iteration");
}

}  // namespace shortwell
