#pragma once

#include <array>
#include <functional>

namespace shortwell {

/// Closed interval known to contain a sign change of the target function.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct BracketedRoot {
  double root = 0.0;
  Bracket final_bracket;  // still straddles the root; width <= requested tol
  int evaluations = 0;
};

/// Hybrid Illinois-secant / bisection solver on a sign-changing bracket.
///
/// Every iterate stays inside the current bracket and a bisection step is
/// forced whenever the secant updates fail to halve the width, so the
/// iteration terminates for any continuous f. Throws InvalidInput("invalid
/// bracket") when f(lo), f(hi) do not differ in sign and
/// NumericalError("evaluation failure") when f returns a non-finite value.
BracketedRoot solve_bracketed(const std::function<double(double)>& f, Bracket bracket, double tol = 1e-12);

using Point2 = std::array<double, 2>;

struct Newton2dOptions {
  double tol = 1e-10;
  int max_iterations = 100;
};

/// Damped Newton iteration for F(x, y) = 0 with a central-difference
/// Jacobian (step max(1e-6, 1e-6|x|) per coordinate). Steps are halved while
/// they increase the residual norm.
Point2 newton_2d(const std::function<Point2(Point2)>& F, Point2 start, Newton2dOptions options = {});

}  // namespace shortwell
