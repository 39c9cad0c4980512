#include <cmath>
#include <vector>

#include "shortwell/error.hpp"
#include "shortwell/kernels.hpp"
#include "shortwell/models.hpp"

namespace shortwell {

double beta_coefficient(int j, double beta) {
  if (!(beta > 0.0)) throw InvalidInput("beta must be positive");
  const double eb = std::exp(beta);
  switch (j) {
    case 0: return -beta * beta / 4.0;
    case 1: return std::exp(-beta) - 1.0;
    case 2: return 2.0 * std::exp(-2.0 * beta) * (1.0 + beta - eb) / (beta * beta);
    case 3:
      return std::exp(-3.0 * beta) *
             (5.0 * eb * eb - 8.0 * eb * (beta + 2.0) + 6.0 * beta * beta + 14.0 * beta + 11.0) /
             (beta * beta * beta * beta);
    default: break;
  }
  throw InvalidInput("no closed form for this order; use beta_series_numeric");
}

namespace {

// With s = lambda + eps and y = sqrt(-s) (s < 0 near the expansion point):
//   F = k (2C - beta S) - beta C - 2 s S,  C = cosh y,  S = sinh(y)/y,
// i.e. the even-parity condition with the common sqrt(s) factor removed.
struct BetaTerms {
  FloatSeries value;
  FloatSeries slope;
};

BetaTerms beta_terms(const FloatSeries& eps, double beta) {
  const auto one = FloatSeries::constant(eps.variable(), eps.order(), 1.0);
  const FloatSeries s = FloatSeries::identity(eps.variable(), eps.order()) + eps;
  const FloatSeries k = sqrt(-eps);
  const FloatSeries y = sqrt(-s);
  const FloatSeries ch = cosh(y);
  const FloatSeries sh = sinh(y);
  const FloatSeries sinc = sh / y;

  const FloatSeries dk = -(one / k) * 0.5;
  const FloatSeries dy = -(one / y) * 0.5;
  const FloatSeries dch = sh * dy;
  const FloatSeries dsinc = (ch / y - sh / (y * y)) * dy;

  BetaTerms out;
  out.value = k * (ch * 2.0 - sinc * beta) - ch * beta - s * sinc * 2.0;
  out.slope = dk * (ch * 2.0 - sinc * beta) + k * (dch * 2.0 - dsinc * beta) - dch * beta -
              (sinc + s * dsinc) * 2.0;
  return out;
}

}  // namespace

FloatSeries beta_series_numeric(double beta, std::size_t order) {
  if (!(beta > 0.0)) throw InvalidInput("beta must be positive");
  if (order > kMaxSeriesOrder) throw InvalidInput("series order exceeds cap of 200");
  SeriesRelation<double> rel;
  rel.expansion_point = -beta * beta / 4.0;
  rel.leading_order = 0;
  rel.value = [beta](const FloatSeries& eps) { return beta_terms(eps, beta).value; };
  rel.derivative = [beta](const FloatSeries& eps) { return beta_terms(eps, beta).slope; };
  return newton_implicit_series(rel, order);
}

double richardson_beta_limit(const std::vector<double>& values) {
  if (values.empty()) throw InvalidInput("no values to extrapolate");
  // Column k removes the beta^k error term; the step ratio is 2.
  std::vector<double> column = values;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double factor = std::ldexp(1.0, static_cast<int>(k));
    for (std::size_t i = values.size() - 1; i >= k; --i) {
      column[i] = (factor * column[i] - column[i - 1]) / (factor - 1.0);
    }
  }
  return column.back();
}

}  // namespace shortwell
