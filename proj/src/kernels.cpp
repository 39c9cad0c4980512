#include "shortwell/kernels.hpp"

#include <cmath>
#include <vector>

namespace shortwell {

namespace {

const std::vector<BigRational>& inverse_factorials() {
  static const std::vector<BigRational> table = [] {
    std::vector<BigRational> t(2 * kMaxSeriesOrder + 2);
    BigRational f(1);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k > 0) f *= BigRational(static_cast<long>(k));
      t[k] = BigRational(1) / f;
    }
    return t;
  }();
  return table;
}

RationalSeries factorial_series(std::size_t order, const std::string& var, std::size_t stride, std::size_t offset,
                                bool alternate) {
  const auto& inv = inverse_factorials();
  std::vector<BigRational> c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    c[m] = inv[stride * m + offset];
    if (alternate && (m % 2 == 1)) c[m] = -c[m];
  }
  return RationalSeries(var, std::move(c));
}

}  // namespace

RationalSeries kernel_series(Kernel kind, std::size_t order, const std::string& variable) {
  if (order > kMaxSeriesOrder) throw InvalidInput("series order exceeds cap of 200");
  switch (kind) {
    case Kernel::cos_sqrt:
      return factorial_series(order, variable, 2, 0, true);
    case Kernel::sinc_sqrt:
      return factorial_series(order, variable, 2, 1, true);
    case Kernel::cosh_sqrt:
      return factorial_series(order, variable, 2, 0, false);
    case Kernel::sinhc_sqrt:
      return factorial_series(order, variable, 2, 1, false);
    case Kernel::exp:
      return factorial_series(order, variable, 1, 0, false);
    case Kernel::tan_sq_sqrt: {
      const auto s = kernel_series(Kernel::sinc_sqrt, order, variable);
      const auto c = kernel_series(Kernel::cos_sqrt, order, variable);
      return RationalSeries::identity(variable, order) * (s * s) / (c * c);
    }
    case Kernel::sqrtcoth:
      return kernel_series(Kernel::cosh_sqrt, order, variable) / kernel_series(Kernel::sinhc_sqrt, order, variable);
    case Kernel::sqrt1p: {
      // binom(1/2, m) by the ratio c_m / c_{m-1} = (3/2 - m)/m.
      std::vector<BigRational> c(order + 1);
      c[0] = BigRational(1);
      for (std::size_t m = 1; m <= order; ++m) {
        c[m] = c[m - 1] * BigRational(3 - 2 * static_cast<long>(m)) / BigRational(2 * static_cast<long>(m));
      }
      return RationalSeries(variable, std::move(c));
    }
  }
  throw InvalidInput("unknown kernel");
}

double cos_sqrt(double z) { return z >= 0 ? std::cos(std::sqrt(z)) : std::cosh(std::sqrt(-z)); }

double sinc_sqrt(double z) {
  if (z == 0.0) return 1.0;
  if (z > 0) {
    const double r = std::sqrt(z);
    return std::sin(r) / r;
  }
  const double r = std::sqrt(-z);
  return std::sinh(r) / r;
}

double cosh_sqrt(double z) { return cos_sqrt(-z); }
double sinhc_sqrt(double z) { return sinc_sqrt(-z); }

double tan_sq_sqrt(double z) {
  if (z >= 0) {
    const double t = std::tan(std::sqrt(z));
    return t * t;
  }
  const double t = std::tanh(std::sqrt(-z));
  return -t * t;
}

double sqrtcoth(double z) {
  if (z == 0.0) return 1.0;
  if (z > 0) {
    const double r = std::sqrt(z);
    return r / std::tanh(r);
  }
  const double r = std::sqrt(-z);
  return r / std::tan(r);
}

namespace {

FloatSeries strip_constant(const FloatSeries& a) { return a - a[0]; }

FloatSeries checked(FloatSeries s) {
  for (double c : s.coefficients()) {
    if (!std::isfinite(c)) throw NumericalError("precision exhausted");
  }
  return s;
}

}  // namespace

FloatSeries exp(const FloatSeries& a) {
  return checked(apply_kernel(Kernel::exp, strip_constant(a)) * std::exp(a[0]));
}

FloatSeries cosh(const FloatSeries& a) {
  const FloatSeries d = strip_constant(a);
  const FloatSeries ep = apply_kernel(Kernel::exp, d);
  const FloatSeries em = apply_kernel(Kernel::exp, -d);
  // cosh(a0 + d) = cosh a0 cosh d + sinh a0 sinh d
  return checked((ep + em) * (0.5 * std::cosh(a[0])) + (ep - em) * (0.5 * std::sinh(a[0])));
}

FloatSeries sinh(const FloatSeries& a) {
  const FloatSeries d = strip_constant(a);
  const FloatSeries ep = apply_kernel(Kernel::exp, d);
  const FloatSeries em = apply_kernel(Kernel::exp, -d);
  return checked((ep + em) * (0.5 * std::sinh(a[0])) + (ep - em) * (0.5 * std::cosh(a[0])));
}

FloatSeries sqrt(const FloatSeries& a) {
  if (!(a[0] > 0.0)) throw InvalidInput("square root needs a positive constant term");
  return checked(sqrt1p(a / a[0] - 1.0) * std::sqrt(a[0]));
}

}  // namespace shortwell
