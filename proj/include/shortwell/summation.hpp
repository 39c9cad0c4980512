#pragma once

#include <optional>
#include <vector>

#include "shortwell/rational.hpp"
#include "shortwell/series.hpp"

namespace shortwell {

/// [L/M] Pade approximant N(x)/D(x) with D(0) = 1.
struct PadeApproximant {
  int numerator_degree = 0;
  int denominator_degree = 0;            // after any reduction
  int requested_denominator_degree = 0;
  std::vector<double> numerator;
  std::vector<double> denominator;
  std::optional<std::vector<BigRational>> exact_numerator;  // rational input only
  std::optional<std::vector<BigRational>> exact_denominator;

  [[nodiscard]] double evaluate(double x) const;
  [[nodiscard]] bool reduced() const { return denominator_degree != requested_denominator_degree; }
};

/// Solves sum_k q_k c_{i-k} = 0 (i = L+1..L+M, q_0 = 1). A singular system
/// retries with M-1 down to M = 1; if all are singular, throws
/// NumericalError("degenerate Pade table entry"). Requires order >= L+M.
PadeApproximant pade(const RationalSeries& series, int l_deg, int m_deg);
PadeApproximant pade(const FloatSeries& series, int l_deg, int m_deg);

/// P + Q f + R f^2 = O(x^(p+q+r+2)).
struct QuadraticPade {
  int p_degree = 0, q_degree = 0, r_degree = 0;
  std::vector<double> p, q, r;
  std::optional<std::vector<BigRational>> exact_p, exact_q, exact_r;
  int branch = 1;                  // sign in front of the square root
  int null_space_dimension = 1;

  /// Root of R w^2 + Q w + P = 0 on the branch that matches the series at 0.
  /// Throws NumericalError("complex branch: ...") with both roots when the
  /// discriminant is negative.
  [[nodiscard]] double evaluate(double x) const;
};

/// Homogeneous Hermite-Pade system; the first nonzero coefficient of R
/// (else Q) is normalized to 1. Throws NumericalError("degenerate system")
/// when only the trivial solution exists. Requires order >= p+q+r+1.
QuadraticPade quadratic_pade(const RationalSeries& series, int p, int q, int r);
QuadraticPade quadratic_pade(const FloatSeries& series, int p, int q, int r);

/// N(u)/D(u) in u = sqrt(lambda), deg N = deg D + 2, D(0) = 1.
struct TwoPointPade {
  int p_small = 0;  // u-Taylor coefficients matched at u = 0
  int q_large = 0;  // leading coefficients matched as u -> infinity
  std::vector<double> numerator;  // in powers of u
  std::vector<double> denominator;
  std::optional<std::vector<BigRational>> exact_numerator, exact_denominator;

  [[nodiscard]] double evaluate_u(double u) const;
  [[nodiscard]] double evaluate(double lambda) const;  // lambda >= 0
  /// Coefficient of u^2 as u -> infinity.
  [[nodiscard]] double leading_coefficient() const;
};

/// `asymptotic` lists the large-u expansion f = a_0 u^2 + a_1 u + a_2 + ...
/// (a_0 = -1 for every well here; Poschl-Teller adds a_1 = +1). The series
/// is in lambda and is re-expanded in u. p_small + q_large must be odd and at
/// least 3; the denominator degree is (p_small + q_large - 3)/2. Throws
/// NumericalError("no two-point approximant at these orders") when the
/// system is singular or the u^2 behavior at infinity is lost.
TwoPointPade two_point_pade(const RationalSeries& series, const std::vector<BigRational>& asymptotic, int p_small,
                            int q_large);

struct RadiusEstimate {
  double radius = 0.0;
  int singularity_sign = 1;        // -1: nearest singularity on the negative axis
  std::vector<double> intercepts;  // Domb-Sykes estimate of 1/R at each j
};

/// Domb-Sykes: the ratios c_j / c_{j-1} are extrapolated linearly in 1/j,
/// b_j = j r_j - (j-1) r_{j-1}, and R = 1/|b| from the last j. Throws
/// NumericalError("no reliable estimate: ...") with fewer than 10
/// consecutive nonzero tail coefficients, a sign pattern that is neither
/// constant nor alternating, or intercepts that fail to settle.
RadiusEstimate radius_estimate(const FloatSeries& series);
RadiusEstimate radius_estimate(const RationalSeries& series);

}  // namespace shortwell
