#pragma once

#include <vector>

namespace shortwell {

/// Gauss-Legendre rule on (-1, 1).
struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive, sum to 2
};

/// n-point Gauss-Legendre rule, 1 <= n <= 256. Nodes come from Newton
/// iteration on P_n started at the Tricomi asymptotic guesses.
QuadratureRule gauss_legendre(int n);

/// Integrates f over [a, b] with the rule mapped affinely.
template <class F>
double integrate(const QuadratureRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace shortwell
